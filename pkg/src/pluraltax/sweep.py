"""Exhaustive enumeration of position universes and brute-force law checking.

Subsets of the universe are bit masks over canonical indices (bit ``i`` is
position ``i + 1``) and are visited in ascending mask order.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .classify import FLAGS, Taxon, TaxonReport, classify
from .model import Model, ModelError, Position, Space, trusted_model
from .reduction import merge_questions

MAX_UNIVERSE = 10**6
MAX_SWEEP_UNIVERSE = 20


def _check_universe(space: Space, bound: int, what: str) -> None:
    if space.universe_size > bound:
        raise ModelError(f"{what}: {space.shape()} universe has {space.universe_size} positions, limit {bound}")


def enumerate_positions(space: Space) -> list:
    """All ``m ** n`` positions in canonical index order."""
    _check_universe(space, MAX_UNIVERSE, "enumerate")
    return [Position(t) for t in itertools.product(range(1, space.m + 1), repeat=space.n)]


def maximal_model(space: Space) -> Model:
    _check_universe(space, MAX_UNIVERSE, "maximal model")
    return trusted_model(space, enumerate_positions(space))


def _subset(space: Space, universe: list, mask: int) -> Model:
    return trusted_model(space, [universe[i] for i in range(len(universe)) if mask >> i & 1])


def for_each_nonempty_subset(space: Space, visitor: Callable[[Model], object]) -> int:
    """Call ``visitor`` once per non-empty subset of the universe; return the count."""
    _check_universe(space, MAX_SWEEP_UNIVERSE, "subset sweep")
    universe = enumerate_positions(space)
    count = 0
    for mask in range(1, 1 << len(universe)):
        visitor(_subset(space, universe, mask))
        count += 1
    return count


class _Tag:
    # Position names are only rendered when a violation message needs them.
    def __init__(self, model):
        self.model = model

    def __str__(self):
        return "{" + ",".join(self.model.position_name(i) for i in range(1, self.model.k + 1)) + "}"

    __format__ = lambda self, spec: format(str(self), spec)


def naive_profile(model: Model) -> dict:
    """Literal quantifier evaluation of G, M, G' and M' over every variable binding."""
    X = [p.assigns for p in model.positions]
    Y = range(model.space.n)
    return {
        "g": all(p[y] == p[z] for p in X for y in Y for z in Y),
        "m": all(pw[y] == px[y] for y in Y for pw in X for px in X),
        "weak_g": any(all(p[y] == p[z] for y in Y for z in Y) for p in X),
        "weak_m": any(all(pw[y] == px[y] for pw in X for px in X) for y in Y),
    }


def check_model(model: Model) -> tuple:
    """Check every law on one model. Returns ``(report_or_None, violations)``."""
    tag = _Tag(model)
    try:
        report = classify(model)
    except (AssertionError, ValueError) as exc:
        return None, [f"{tag}: classification failed: {exc}"]
    problems = []
    pr = report.profile
    naive = naive_profile(model)
    for key, val in naive.items():
        if getattr(pr, key) != val:
            problems.append(f"{tag}: {key} is {getattr(pr, key)} but naive evaluation gives {val}")
    g, m, wg, wm = naive["g"], naive["m"], naive["weak_g"], naive["weak_m"]
    if g and not wg:
        problems.append(f"{tag}: G without G'")
    if m and not wm:
        problems.append(f"{tag}: M without M'")
    if not g and m and wg:
        problems.append(f"{tag}: ~G and M with G'")
    if g and not m and wm:
        problems.append(f"{tag}: G and ~M with M'")
    matching = [t for t, cond in _TAXON_TESTS.items() if cond(g, m)]
    if matching != [report.primary]:
        problems.append(f"{tag}: taxon {report.primary.value} but conditions match {[t.value for t in matching]}")
    if report.primary is Taxon.LOCAL_PLURALISM:
        hybrid = report.hybrid_pluralist or report.hybrid_localist
        if hybrid == report.strict:
            problems.append(f"{tag}: local pluralism must be exactly one of strict or hybrid")
    for w_key, w in pr.witnesses.items():
        if not w.replay(model):
            problems.append(f"{tag}: witness for {w_key} does not replay")
    if not model.syncretic:
        merged = classify(merge_questions(model))
        if (merged.profile.values(), _flags(merged)) != (pr.values(), _flags(report)):
            problems.append(f"{tag}: merging questions changes the classification")
    return report, problems


_TAXON_TESTS = {
    Taxon.GLOBAL_MONISM: lambda g, m: g and m,
    Taxon.GLOBAL_PLURALISM: lambda g, m: g and not m,
    Taxon.LOCAL_MONISM: lambda g, m: not g and m,
    Taxon.LOCAL_PLURALISM: lambda g, m: not g and not m,
}


def _flags(report: TaxonReport) -> tuple:
    return (report.primary,) + tuple(getattr(report, f) for f in FLAGS)


@dataclass
class SweepReport:
    space: Space
    models_checked: int = 0
    taxon_counts: dict = field(default_factory=lambda: {t: 0 for t in Taxon})
    flag_counts: dict = field(default_factory=lambda: {f: 0 for f in FLAGS})
    law_violations: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.law_violations

    def add(self, report: TaxonReport | None, problems: list) -> None:
        self.models_checked += 1
        if report is not None:
            self.taxon_counts[report.primary] += 1
            for f in FLAGS:
                self.flag_counts[f] += getattr(report, f)
        self.law_violations.extend(problems)

    def merge(self, other: "SweepReport") -> None:
        self.models_checked += other.models_checked
        for t, c in other.taxon_counts.items():
            self.taxon_counts[t] += c
        for f, c in other.flag_counts.items():
            self.flag_counts[f] += c
        self.law_violations.extend(other.law_violations)


def _sweep_range(space: Space, lo: int, hi: int) -> SweepReport:
    universe = enumerate_positions(space)
    part = SweepReport(space)
    for mask in range(lo, hi):
        part.add(*check_model(_subset(space, universe, mask)))
    return part


def verify_laws(space: Space, workers: int = 1) -> SweepReport:
    """Classify every non-empty subset of the universe and check each law.

    Violations are collected in the report rather than raised. With
    ``workers > 1`` the mask range is split across processes and the partial
    reports are summed.
    """
    _check_universe(space, MAX_SWEEP_UNIVERSE, "verify")
    start = time.perf_counter()
    total = 1 << space.universe_size
    report = SweepReport(space)
    if workers <= 1 or total < 4096:
        report.merge(_sweep_range(space, 1, total))
    else:
        step = -(-(total - 1) // (workers * 4))
        bounds = [(lo, min(lo + step, total)) for lo in range(1, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sweep_range, *zip(*[(space, lo, hi) for lo, hi in bounds])):
                report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report

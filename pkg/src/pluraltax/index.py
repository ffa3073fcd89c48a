"""Mixed-radix canonical indexing of positions.

A position ``(j_1, ..., j_n)`` over ``m`` answers has index
``1 + sum(m ** (n - i) * (j_i - 1))``: the first question is the most
significant digit, answers count in label order, and indexing starts at 1.
"""

from __future__ import annotations

import numpy as np

from .model import ModelError, Position, Space, validate_position


def canonical_index(space: Space, p: Position) -> int:
    if not isinstance(p, Position):
        p = Position(tuple(p))
    if p.syncretic:
        raise ModelError("syncretic positions have no canonical index")
    validate_position(space, p)
    idx = 0
    for j in p.assigns:
        idx = idx * space.m + (j - 1)
    return idx + 1


def position_from_index(space: Space, idx: int) -> Position:
    """Inverse of :func:`canonical_index`."""
    if isinstance(idx, bool) or not isinstance(idx, int) or not 1 <= idx <= space.universe_size:
        raise ModelError(f"index {idx!r} outside 1..{space.universe_size} for a {space.shape()} space")
    rest = idx - 1
    digits = []
    for _ in range(space.n):
        rest, d = divmod(rest, space.m)
        digits.append(d + 1)
    return Position(tuple(reversed(digits)))


def compare_positions(space: Space, p: Position, q: Position) -> int:
    """Return -1, 0 or 1 as ``p`` sorts before, equal to, or after ``q``."""
    a, b = canonical_index(space, p), canonical_index(space, q)
    return (a > b) - (a < b)


def _dtype(space: Space):
    if space.universe_size < 2**31:
        return np.int32
    if space.universe_size < 2**63:
        return np.int64
    raise ModelError(f"{space.shape()} universe is too large for array indexing")


def universe_table(space: Space) -> np.ndarray:
    """Every position of ``space`` as rows of an ``(m ** n, n)`` answer-ordinal array.

    Rows are in lexicographic answer order, which is canonical index order.
    """
    grid = np.indices((space.m,) * space.n, dtype=_dtype(space))
    grid += 1
    return grid.reshape(space.n, -1).T


def canonical_indices(space: Space, table) -> np.ndarray:
    """Vectorized :func:`canonical_index` over the rows of ``table``."""
    dtype = _dtype(space)
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[1] != space.n:
        raise ModelError(f"expected an array of shape (k, {space.n}), got {table.shape}")
    if table.size and (table.min() < 1 or table.max() > space.m):
        raise ModelError(f"answer ordinals must lie in 1..{space.m}")
    # Horner form: ((j1 - 1) * m + j2 - 1) * m + ... + jn.
    idx = table[:, 0].astype(dtype)
    for i in range(1, space.n):
        idx -= 1
        idx *= space.m
        idx += table[:, i]
    return idx


def positions_from_indices(space: Space, indices) -> np.ndarray:
    """Vectorized :func:`position_from_index`; returns one row per index."""
    dtype = _dtype(space)
    rest = np.asarray(indices).astype(dtype)
    if rest.ndim != 1:
        raise ModelError("expected a one-dimensional array of indices")
    if rest.size and (rest.min() < 1 or rest.max() > space.universe_size):
        raise ModelError(f"indices must lie in 1..{space.universe_size}")
    rest -= 1
    out = np.empty((len(rest), space.n), dtype=dtype)
    for i in range(space.n - 1, 0, -1):
        rest, out[:, i] = np.divmod(rest, space.m)
    out[:, 0] = rest
    out += 1
    return out

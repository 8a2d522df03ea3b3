"""Finite atomic measure spaces and almost-everywhere function classes.

Atoms are indexed 0..n-1. Weights live in [0, +inf]; an atom of weight 0
is null and function values there are quotiented away, so every norm
evaluator first replaces its input by the canonical representative with
zeros on null atoms. Measurable sets are plain frozensets of atom
indices; the full power set plays the role of the sigma-algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "MeasureSpace",
    "MSet",
    "is_null",
    "ae_equal",
    "delta_ring",
    "sigma_property",
]

MSet = frozenset

# delta_ring enumerates all 2^n subsets; above this it refuses.
MAX_ENUM_ATOMS = 16


@dataclass(frozen=True, eq=False)
class MeasureSpace:
    """n atoms with weights in [0, +inf]; weight 0 marks a null atom."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).copy()
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a nonempty 1-d array")
        if np.isnan(w).any() or (w < 0).any():
            raise ValueError("weights must be nonnegative (+inf allowed)")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.size

    @property
    def null_mask(self) -> np.ndarray:
        return self.weights == 0.0

    def check_set(self, A) -> MSet:
        A = frozenset(int(i) for i in A)
        if A and (min(A) < 0 or max(A) >= self.n):
            raise ValueError(f"set {sorted(A)} not within atoms 0..{self.n - 1}")
        return A

    def canonical(self, f) -> np.ndarray:
        """Canonical a.e.-class representative: null atoms zeroed.

        Accepts a single vector or any batch shaped (..., n).
        """
        F = np.asarray(f, dtype=float)
        if F.shape[-1:] != (self.n,):
            raise ValueError(f"expected length-{self.n} vectors, got shape {F.shape}")
        if not np.isfinite(F).all():
            raise ValueError("function values must be finite (no NaN/inf)")
        F = F.copy()
        F[..., self.null_mask] = 0.0
        return F

    def indicator(self, A) -> np.ndarray:
        A = self.check_set(A)
        chi = np.zeros(self.n)
        if A:
            chi[sorted(A)] = 1.0
        return chi

    def __repr__(self):
        return f"MeasureSpace(weights={self.weights.tolist()})"


def is_null(space: MeasureSpace, A) -> bool:
    """A set is null exactly when all of its atoms have weight 0."""
    A = space.check_set(A)
    return bool(all(space.weights[i] == 0.0 for i in A))


def ae_equal(space: MeasureSpace, f, g) -> bool:
    """Equality off null atoms (the a.e.-class identification)."""
    f = space.canonical(f)
    g = space.canonical(g)
    if f.shape != g.shape:
        raise ValueError("length mismatch")
    return bool(np.array_equal(f, g))


def _all_subset_indicators(n: int) -> np.ndarray:
    masks = (np.arange(2**n)[:, None] >> np.arange(n)) & 1
    return masks.astype(float)


def delta_ring(space: MeasureSpace, X) -> list:
    """All sets whose indicator has finite norm in X, smallest first.

    The result is automatically a delta-ring: the indicator of a subset
    is dominated by the indicator of the set, so membership is closed
    under union (via the quasi-triangle bound), intersection and
    difference. Enumeration is exhaustive, so n is capped.
    """
    from .spaces import _norm_nd

    if space.n > MAX_ENUM_ATOMS:
        raise ValueError(f"delta_ring enumerates 2^n subsets; n={space.n} exceeds {MAX_ENUM_ATOMS}")
    chis = _all_subset_indicators(space.n)
    finite = np.isfinite(_norm_nd(X, space.canonical(chis)))
    sets = [
        frozenset(int(i) for i in np.nonzero(row)[0])
        for row, ok in zip(chis, finite)
        if ok
    ]
    return sorted(sets, key=lambda A: (len(A), sorted(A)))


def sigma_property(space: MeasureSpace, X) -> bool:
    """True when every atom of positive weight has a finite-norm indicator.

    On a finite atom set this is the covering condition: the union of the
    finite-norm singletons exhausts all non-null atoms, equivalently X
    contains a function strictly positive a.e.
    """
    from .spaces import _norm_nd

    idx = np.nonzero(~space.null_mask)[0]
    if idx.size == 0:
        return True
    chis = np.zeros((idx.size, space.n))
    chis[np.arange(idx.size), idx] = 1.0
    return bool(np.isfinite(_norm_nd(X, chis)).all())

"""Pauli strings on a small qubit register: algebra, dense forms, and
state-vector kernels.

Sites are numbered 1..n with site 1 as the most significant bit of the
basis index.  A string is held as X/Z bitmasks plus a complex phase
(Y = iXZ contributes both bits); products, commutation checks and dense
matrices all derive from that form.  Applying a string to a state vector
is a single fancy-indexed permutation with per-index phases, O(2^n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

AXES = ("x", "y", "z")

# single-site products W_a W_b = phase * W_c, keyed by (a, b) over i,x,y,z
_SITE_PRODUCT = {
    ("i", "i"): (1, "i"), ("i", "x"): (1, "x"), ("i", "y"): (1, "y"), ("i", "z"): (1, "z"),
    ("x", "i"): (1, "x"), ("x", "x"): (1, "i"), ("x", "y"): (1j, "z"), ("x", "z"): (-1j, "y"),
    ("y", "i"): (1, "y"), ("y", "x"): (-1j, "z"), ("y", "y"): (1, "i"), ("y", "z"): (1j, "x"),
    ("z", "i"): (1, "z"), ("z", "x"): (1j, "y"), ("z", "y"): (-1j, "x"), ("z", "z"): (1, "i"),
}


@dataclass(frozen=True)
class PauliTerm:
    """Real coefficient times a product of single-site Pauli factors.

    An empty factor map is the identity term.  Site indices must lie in
    1..n for the register the term is used on; that is checked at
    application time, not construction.
    """

    coefficient: float
    factors: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "factors", dict(self.factors))
        for site, axis in self.factors.items():
            if site < 1:
                raise ValueError(f"site {site} out of range (sites start at 1)")
            if axis not in AXES:
                raise ValueError(f"unknown axis {axis!r}")

    def __neg__(self) -> "PauliTerm":
        return PauliTerm(-self.coefficient, self.factors)

    def label(self) -> str:
        if not self.factors:
            return f"{self.coefficient:+g}*1"
        body = " ".join(f"{a}{s}" for s, a in sorted(self.factors.items()))
        return f"{self.coefficient:+g}*{body}"

    def commutes_with(self, other: "PauliTerm") -> bool:
        """Strings commute iff they anticommute on an even number of sites."""
        clashes = sum(
            1
            for site, axis in self.factors.items()
            if site in other.factors and other.factors[site] != axis
        )
        return clashes % 2 == 0


@dataclass(frozen=True)
class PauliString:
    """Phase times a bare Pauli word, in X/Z mask form (site 1 = high bit)."""

    n_sites: int
    phase: complex = 1.0
    factors: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "factors", dict(self.factors))
        for site in self.factors:
            if not 1 <= site <= self.n_sites:
                raise ValueError(f"site {site} out of range for {self.n_sites} sites")

    def __mul__(self, other: "PauliString") -> "PauliString":
        if other.n_sites != self.n_sites:
            raise ValueError("site-count mismatch")
        phase = self.phase * other.phase
        factors: dict[int, str] = {}
        for site in set(self.factors) | set(other.factors):
            a = self.factors.get(site, "i")
            b = other.factors.get(site, "i")
            p, c = _SITE_PRODUCT[(a, b)]
            phase *= p
            if c != "i":
                factors[site] = c
        return PauliString(self.n_sites, phase, factors)

    def dagger(self) -> "PauliString":
        return PauliString(self.n_sites, complex(self.phase).conjugate(), self.factors)

    def as_term(self) -> PauliTerm:
        """Convert to a real-coefficient term; fails on residual imaginary phase."""
        if abs(complex(self.phase).imag) > 1e-14:
            raise ValueError(f"phase {self.phase} is not real")
        return PauliTerm(float(complex(self.phase).real), self.factors)


def _masks(factors: Mapping[int, str], n: int) -> tuple[int, int, int]:
    """(flip mask, phase mask, y count): X/Y flip bits, Y/Z contribute
    (-1)^bit phases, each Y an extra factor i."""
    flip = 0
    phase = 0
    ycount = 0
    for site, axis in factors.items():
        bit = 1 << (n - site)
        if axis in ("x", "y"):
            flip |= bit
        if axis in ("y", "z"):
            phase |= bit
        if axis == "y":
            ycount += 1
    return flip, phase, ycount


def _parity(values: np.ndarray) -> np.ndarray:
    v = values.copy()
    shift = 16
    while shift:
        v ^= v >> shift
        shift //= 2
    return v & 1


def apply_pauli(term: PauliTerm, state: np.ndarray, n: int) -> np.ndarray:
    """Return (coefficient * Pauli word) |state> without materialising a matrix."""
    if state.shape != (1 << n,):
        raise ValueError(f"state has shape {state.shape}, expected ({1 << n},)")
    flip, phase_mask, ycount = _masks(term.factors, n)
    idx = np.arange(1 << n)
    signs = 1.0 - 2.0 * _parity(idx & phase_mask)
    out = np.empty_like(state, dtype=complex)
    out[idx ^ flip] = (term.coefficient * (1j ** ycount)) * signs * state
    return out


def dense_operator(term: PauliTerm, n: int) -> np.ndarray:
    """Dense 2^n x 2^n matrix of the term (verification paths only)."""
    flip, phase_mask, ycount = _masks(term.factors, n)
    idx = np.arange(1 << n)
    signs = 1.0 - 2.0 * _parity(idx & phase_mask)
    out = np.zeros((1 << n, 1 << n), dtype=complex)
    out[idx ^ flip, idx] = (term.coefficient * (1j ** ycount)) * signs
    return out


def dense_sum(terms: Iterable[PauliTerm], n: int) -> np.ndarray:
    out = np.zeros((1 << n, 1 << n), dtype=complex)
    for t in terms:
        flip, phase_mask, ycount = _masks(t.factors, n)
        idx = np.arange(1 << n)
        signs = 1.0 - 2.0 * _parity(idx & phase_mask)
        out[idx ^ flip, idx] += (t.coefficient * (1j ** ycount)) * signs
    return out

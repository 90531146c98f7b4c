"""Krull dimension from a Groebner basis, checked against the Hilbert series.

For a monomial ideal ``M`` the variety ``V(M)`` is a union of coordinate
subspaces, and a set ``S`` of variables spans one of them exactly when no
generator has its support inside ``S``.  The dimension is the largest such
``S``.  Equivalently it is ``N`` minus the size of a minimum hitting set of
the generator supports.  Note that this is a condition on supports (that is,
on the radical): ``<x^2>`` has dimension 0 even though ``x`` is not in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .groebner import GroebnerBasis
from .polycore import Monomial, monomial_divides

__all__ = [
    "MonomialIdeal",
    "HilbertData",
    "DimensionReport",
    "InternalInconsistencyError",
    "leading_term_ideal",
    "krull_dimension",
    "min_hitting_set",
    "hilbert_series",
    "cross_check",
]


class InternalInconsistencyError(RuntimeError):
    """Two independent computations disagreed; this is a bug, not bad input."""


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sort by degree so a divisor is always seen before its multiples
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = [tuple(int(e) for e in m) for m in self.generators]
        for m in gens:
            if len(m) != self.nvars:
                raise ValueError(f"monomial {m} in a ring with {self.nvars} variables")
        object.__setattr__(self, "generators", _minimalize(gens))

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.nvars,)

    def supports(self) -> list[int]:
        """Generator supports as bitmasks (bit i set when variable i occurs)."""
        return sorted({sum(1 << i for i, e in enumerate(m) if e) for m in self.generators})

    def contains(self, m: Monomial) -> bool:
        return any(monomial_divides(g, m) for g in self.generators)

    def add(self, m: Monomial) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, self.generators + (tuple(m),))


def leading_term_ideal(basis: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(basis.nvars, tuple(basis.leading_monomials()))


# -- combinatorial dimension -------------------------------------------------


def min_hitting_set(supports: Sequence[int], nvars: int) -> int:
    """Bitmask of a minimum set of variables meeting every support.

    Branch and bound: pick an unhit support with the fewest variables and
    branch on which of its variables enters the hitting set.  Memoized on the
    set of still-unhit supports.
    """
    supports = tuple(sorted(set(supports)))
    if 0 in supports:
        raise ValueError("the empty support cannot be hit")

    @lru_cache(maxsize=None)
    def solve(unhit: tuple[int, ...]) -> int:
        # least-size hitting set of the given supports, as a mask
        if not unhit:
            return 0
        pivot = min(unhit, key=lambda s: (bin(s).count("1"), s))
        best_mask = None
        best_size = None
        bits = pivot
        while bits:
            v = bits & -bits
            bits ^= v
            rest = tuple(s for s in unhit if not s & v)
            sub = solve(rest) | v
            size = bin(sub).count("1")
            if best_size is None or size < best_size or (size == best_size and sub < best_mask):
                best_size, best_mask = size, sub
                if size == 1:
                    break
        return best_mask

    return solve(supports)


def _lexmin_independent_set(supports: Sequence[int], nvars: int, size: int) -> tuple[int, ...]:
    """Lexicographically smallest variable set of the given size containing no support."""
    supports = list(supports)
    chosen: list[int] = []

    def ok(mask: int) -> bool:
        return all(s & ~mask for s in supports)

    def search(start: int, mask: int) -> bool:
        if len(chosen) == size:
            return True
        for v in range(start, nvars):
            if nvars - v < size - len(chosen):
                return False
            new = mask | (1 << v)
            if ok(new):
                chosen.append(v)
                if search(v + 1, new):
                    return True
                chosen.pop()
        return False

    if not search(0, 0):
        raise InternalInconsistencyError("no independent set of the hitting-set bound size")
    return tuple(chosen)


def krull_dimension(ideal: MonomialIdeal) -> tuple[int, tuple[int, ...]]:
    """``(dimension, witness)`` of ``V(ideal)``.

    The witness is the lexicographically smallest maximum independent set of
    variable indices.  The unit ideal gives ``(-1, ())``.
    """
    if ideal.is_unit:
        return -1, ()
    supports = ideal.supports()
    n = ideal.nvars
    if not supports:
        return n, tuple(range(n))
    tau = bin(min_hitting_set(supports, n)).count("1")
    dim = n - tau
    return dim, _lexmin_independent_set(supports, n, dim)


# -- Hilbert series ------------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series of R/M written as ``numerator(t) / (1-t)^nvars``.

    ``reduced_numerator`` is the numerator after cancelling every factor
    ``(1-t)``; ``hilbert_degree`` is the degree of the affine Hilbert
    polynomial, which equals the dimension of ``V(M)`` (``-1`` when R/M = 0).
    """

    nvars: int
    numerator: tuple[int, ...]
    reduced_numerator: tuple[int, ...]
    hilbert_degree: int

    @property
    def multiplicity(self) -> int:
        return sum(self.reduced_numerator)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _numerator(gens: tuple[Monomial, ...]) -> list[int]:
    """K(t) with HS(R/M) = K(t) / (1-t)^N, for minimal generators ``gens``."""
    if not gens:
        return [1]
    if any(not any(m) for m in gens):
        return [0]
    # base case: pure powers of distinct variables multiply out
    if all(sum(1 for e in m if e) == 1 for m in gens):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    n = len(gens[0])
    # pivot on the variable occurring in the most non-pure-power generators
    counts = [0] * n
    for m in gens:
        if sum(1 for e in m if e) > 1:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
    var = max(range(n), key=lambda i: (counts[i], -i))
    power = min(m[var] for m in gens if m[var] and sum(1 for e in m if e) > 1)
    pivot = tuple(power if i == var else 0 for i in range(n))
    # HS(R/M) numerator: K(M + <p>) + t^deg(p) * K(M : p)
    plus = _minimalize(gens + (pivot,))
    colon = _minimalize(tuple(tuple(max(e - q, 0) for e, q in zip(m, pivot)) for m in gens))
    return _poly_add(_numerator(plus), [0] * power + _numerator(colon))


def hilbert_series(ideal: MonomialIdeal) -> HilbertData:
    num = _trim(_numerator(ideal.generators))
    n = ideal.nvars
    if num == [0]:
        return HilbertData(n, (0,), (0,), -1)
    reduced = list(num)
    vanishing = 0
    # synthetic division by (1 - t) while the value at t = 1 is zero
    while sum(reduced) == 0:
        quotient = []
        acc = 0
        for c in reduced[:-1]:
            acc += c
            quotient.append(acc)
        reduced = quotient
        vanishing += 1
    return HilbertData(n, tuple(num), tuple(reduced), n - vanishing)


# -- cross check ---------------------------------------------------------------


@dataclass(frozen=True)
class DimensionReport:
    dimension: int
    witness: tuple[int, ...]
    hilbert_degree: int
    monomial_ideal: MonomialIdeal

    @property
    def agreement(self) -> bool:
        return self.dimension == self.hilbert_degree


def cross_check(basis: GroebnerBasis) -> DimensionReport:
    """Dimension by the subset criterion and by the Hilbert polynomial degree."""
    lt = leading_term_ideal(basis)
    dim, witness = krull_dimension(lt)
    hd = hilbert_series(lt).hilbert_degree
    report = DimensionReport(dim, witness, hd, lt)
    if not report.agreement:
        raise InternalInconsistencyError(
            f"combinatorial dimension {dim} but Hilbert polynomial degree {hd}"
        )
    return report

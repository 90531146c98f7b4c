"""Buchberger's algorithm for reduced Groebner bases over Q.

The engine works on integer-coefficient (primitive) polynomials internally
and only produces monic rational polynomials for the final reduced basis.
Pairs are pruned with the Gebauer-Moeller update, which implements both
Buchberger criteria (coprime leading monomials, and the chain criterion).
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from math import gcd
from operator import add, le, sub
from typing import Iterable, Sequence

from . import _checks
from .polycore import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    AmbientMismatchError,
    divide,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)

__all__ = [
    "Ideal",
    "GroebnerStats",
    "GroebnerBasis",
    "BudgetExhausted",
    "STRATEGIES",
    "s_polynomial",
    "buchberger",
    "groebner_basis",
    "normal_form",
]

STRATEGIES = ("normal", "sugar", "fifo")

DEFAULT_MAX_PAIRS = 10**6
DEFAULT_MAX_SECONDS = 600.0


@dataclass(frozen=True)
class Ideal:
    generators: tuple[Polynomial, ...]
    nvars: int
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.nvars != self.nvars:
                raise AmbientMismatchError(
                    f"generator in {g.nvars} variables, ideal in {self.nvars}"
                )
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "order", MonomialOrder.parse(self.order))

    @classmethod
    def of(cls, polys: Iterable[Polynomial], order: MonomialOrder | str = GREVLEX, nvars: int | None = None) -> Ideal:
        polys = list(polys)
        if nvars is None:
            if not polys:
                raise ValueError("cannot infer the ring of an empty generator list")
            nvars = polys[0].nvars
        return cls(tuple(polys), nvars, MonomialOrder.parse(order))


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    pairs_skipped: int = 0
    zero_reductions: int = 0
    reduction_steps: int = 0
    elapsed_seconds: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


class BudgetExhausted(RuntimeError):
    """The pair or wall-clock budget ran out before the basis was complete."""

    def __init__(self, message: str, stats: GroebnerStats):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by leading monomial."""

    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    nvars: int
    stats: GroebnerStats = field(default_factory=GroebnerStats, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L`` the lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    lf, lg = f.leading(order), g.leading(order)
    lcm = monomial_lcm(lf.monomial, lg.monomial)
    a = f.mul_term(monomial_quotient(lcm, lf.monomial), Fraction(1) / Fraction(lf.coefficient))
    b = g.mul_term(monomial_quotient(lcm, lg.monomial), Fraction(1) / Fraction(lg.coefficient))
    return a - b


def normal_form(f: Polynomial, basis: GroebnerBasis | Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Full remainder of ``f`` on division by the basis."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        elements = basis.elements
    else:
        elements = list(basis)
        if order is None:
            raise ValueError("order is required when passing a plain list")
    if not elements:
        return f
    return divide(f, elements, order)[1]


# -- engine -----------------------------------------------------------------


def _neg_key_fn(order: MonomialOrder):
    # ascending neg_key == descending monomial order
    if order is MonomialOrder.GREVLEX:
        return lambda m: (-sum(m), m[::-1])
    if order is MonomialOrder.GRLEX:
        return lambda m: (-sum(m), tuple(-e for e in m))
    return lambda m: tuple(-e for e in m)


def _primitive(terms: dict) -> dict:
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return terms
    if g > 1:
        return {m: c // g for m, c in terms.items()}
    return terms


def _to_integer_terms(p: Polynomial) -> dict:
    return _primitive(p.primitive().terms.copy())


def _mask(m: Monomial) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


class _Element:
    __slots__ = ("index", "lm", "lc", "tail", "mask", "sugar", "terms")

    def __init__(self, index: int, terms: dict, lm: Monomial, sugar: int):
        self.index = index
        self.lm = lm
        self.lc = terms[lm]
        self.terms = terms
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.mask = _mask(lm)
        self.sugar = sugar


class _Engine:
    def __init__(self, nvars, order, strategy, max_pairs, max_seconds, tail_reduce_every):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown pair strategy {strategy!r}; choose from {STRATEGIES}")
        self.nvars = nvars
        self.order = order
        self.key = order.key
        self.neg_key = _neg_key_fn(order)
        self._nk_cache: dict = {}
        self.strategy = strategy
        self.max_pairs = max_pairs
        self.max_seconds = max_seconds
        self.tail_reduce_every = tail_reduce_every
        self.stats = GroebnerStats()
        self.start = time.monotonic()
        self.elements: list[_Element] = []
        self.active: list[_Element] = []
        self.pairs: list = []  # heap of (sort key, seq, i, j)
        self.live: set = set()
        self.seq = 0

    # -- budget --------------------------------------------------------

    def elapsed(self) -> float:
        return time.monotonic() - self.start

    def check_time(self):
        if self.max_seconds is not None and self.elapsed() > self.max_seconds:
            self.stats.elapsed_seconds = self.elapsed()
            raise BudgetExhausted(
                f"wall-clock budget of {self.max_seconds} s exhausted", self.stats
            )

    # -- reduction -----------------------------------------------------

    def nk(self, m):
        v = self._nk_cache.get(m)
        if v is None:
            v = self._nk_cache[m] = self.neg_key(m)
        return v

    def find_divisor(self, m: Monomial, mask: int) -> _Element | None:
        for g in self.active:
            if not (g.mask & ~mask) and all(map(le, g.lm, m)):
                return g
        return None

    def reduce(self, p: dict) -> dict:
        """Fully reduce ``p`` by the active basis; returns a primitive remainder."""
        nk = self.nk
        heap = [(nk(m), m) for m in p]
        heapq.heapify(heap)
        rem: dict = {}
        steps = 0
        stats = self.stats
        while heap:
            m = heapq.heappop(heap)[1]
            c = p.pop(m, None)
            if c is None:
                continue
            g = self.find_divisor(m, _mask(m))
            if g is None:
                rem[m] = c
                continue
            a = g.lc
            if c % a == 0:
                q = c // a
            else:
                h = gcd(a, c)
                scale = a // h
                q = c // h
                for k in p:
                    p[k] *= scale
                for k in rem:
                    rem[k] *= scale
            t = tuple(map(sub, m, g.lm))
            for gm, gc in g.tail:
                mm = tuple(map(add, gm, t))
                v = p.get(mm)
                if v is None:
                    p[mm] = -q * gc
                    heapq.heappush(heap, (nk(mm), mm))
                else:
                    v -= q * gc
                    if v:
                        p[mm] = v
                    else:
                        del p[mm]
            steps += 1
            if steps & 255 == 0:
                self.check_time()
                rem, p = self._shrink(rem, p)
        stats.reduction_steps += steps
        return _primitive(rem)

    @staticmethod
    def _shrink(rem: dict, p: dict):
        g = 0
        for c in rem.values():
            g = gcd(g, c)
            if g == 1:
                return rem, p
        for c in p.values():
            g = gcd(g, c)
            if g == 1:
                return rem, p
        if g > 1:
            rem = {m: c // g for m, c in rem.items()}
            p = {m: c // g for m, c in p.items()}
        return rem, p

    # -- pairs ----------------------------------------------------------

    def pair_key(self, i: int, j: int, lcm: Monomial):
        self.seq += 1
        if self.strategy == "normal":
            return (self.key(lcm), self.seq)
        if self.strategy == "sugar":
            fi, fj = self.elements[i], self.elements[j]
            d = sum(lcm)
            sugar = max(fi.sugar + d - sum(fi.lm), fj.sugar + d - sum(fj.lm))
            return (sugar, self.key(lcm), self.seq)
        return (self.seq,)

    def s_poly(self, f: _Element, g: _Element) -> dict:
        lcm = monomial_lcm(f.lm, g.lm)
        tf = monomial_quotient(lcm, f.lm)
        tg = monomial_quotient(lcm, g.lm)
        h = gcd(f.lc, g.lc)
        cf, cg = g.lc // h, f.lc // h
        out: dict = {}
        for m, c in f.tail:
            out[tuple(map(add, m, tf))] = cf * c
        for m, c in g.tail:
            mm = tuple(map(add, m, tg))
            v = out.get(mm, 0) - cg * c
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out

    def sugar_of_pair(self, f: _Element, g: _Element) -> int:
        d = sum(monomial_lcm(f.lm, g.lm))
        return max(f.sugar + d - sum(f.lm), g.sugar + d - sum(g.lm))

    def add_element(self, terms: dict, sugar: int):
        lm = max(terms, key=self.key)
        if terms[lm] < 0:
            terms = {m: -c for m, c in terms.items()}
        h = _Element(len(self.elements), terms, lm, sugar)
        self.elements.append(h)
        self.update(h)
        if self.tail_reduce_every and len(self.elements) % self.tail_reduce_every == 0:
            self.tail_reduce()

    def update(self, h: _Element):
        """Gebauer-Moeller installation of a new element."""
        lcm_of = {}
        candidates = []
        for g in self.active:
            lcm_of[g.index] = monomial_lcm(h.lm, g.lm)
            candidates.append(g)

        def coprime(a, b):
            return not (a.mask & b.mask)

        # chain criterion among the new pairs
        kept = []
        for pos, g in enumerate(candidates):
            L = lcm_of[g.index]
            if coprime(h, g):
                kept.append(g)
                continue
            others = candidates[pos + 1:] + kept
            if any(monomial_divides(lcm_of[o.index], L) for o in others):
                self.stats.pairs_skipped += 1
                continue
            kept.append(g)
        # keep one pair per distinct lcm, and drop coprime pairs (first criterion)
        new_pairs = []
        for g in kept:
            if coprime(h, g):
                self.stats.pairs_skipped += 1
                continue
            new_pairs.append(g)

        # prune old pairs whose lcm is strictly covered through h
        dead = []
        for pair in self.live:
            i, j, L = pair
            if not monomial_divides(h.lm, L):
                continue
            li = monomial_lcm(self.elements[i].lm, h.lm)
            lj = monomial_lcm(self.elements[j].lm, h.lm)
            if li != L and lj != L:
                dead.append(pair)
        for pair in dead:
            self.live.discard(pair)
            self.stats.pairs_skipped += 1

        for g in new_pairs:
            L = lcm_of[g.index]
            pair = (g.index, h.index, L)
            self.live.add(pair)
            heapq.heappush(self.pairs, (self.pair_key(g.index, h.index, L), pair))

        self.active = [g for g in self.active if not monomial_divides(h.lm, g.lm)]
        self.active.append(h)

    def tail_reduce(self):
        """Reduce the tails of active elements; leading monomials are unchanged."""
        for g in list(self.active):
            terms = self.reduce_by_others(g)
            if terms[g.lm] < 0:
                terms = {m: -c for m, c in terms.items()}
            g.terms = terms
            g.lc = terms[g.lm]
            g.tail = [(m, c) for m, c in terms.items() if m != g.lm]

    def reduce_by_others(self, g: _Element) -> dict:
        # g.lm is not divisible by any other active leading monomial, so it survives
        saved = self.active
        self.active = [e for e in saved if e is not g]
        try:
            return self.reduce(dict(g.terms))
        finally:
            self.active = saved

    # -- main loop -------------------------------------------------------

    def run(self, generators: Sequence[dict]) -> list[dict]:
        for terms in generators:
            r = self.reduce(dict(terms))
            if r:
                self.add_element(r, max(sum(m) for m in terms))
        while self.pairs:
            _, pair = heapq.heappop(self.pairs)
            if pair not in self.live:
                continue
            self.live.discard(pair)
            if self.max_pairs is not None and self.stats.pairs_processed >= self.max_pairs:
                self.stats.elapsed_seconds = self.elapsed()
                raise BudgetExhausted(f"pair budget of {self.max_pairs} exhausted", self.stats)
            self.check_time()
            i, j, _ = pair
            f, g = self.elements[i], self.elements[j]
            self.stats.pairs_processed += 1
            s = self.s_poly(f, g)
            h = self.reduce(s) if s else s
            if h:
                self.add_element(h, self.sugar_of_pair(f, g))
            else:
                self.stats.zero_reductions += 1
        return self.interreduce()

    def interreduce(self) -> list[dict]:
        return [self.reduce_by_others(g) for g in self.active]


def _monic(terms: dict, order: MonomialOrder, nvars: int) -> Polynomial:
    lm = max(terms, key=order.key)
    lc = terms[lm]
    coeffs = {}
    for m, c in terms.items():
        v = Fraction(c, lc)
        coeffs[m] = v.numerator if v.denominator == 1 else v
    return Polynomial._raw(nvars, coeffs)


def buchberger(
    ideal: Ideal,
    *,
    strategy: str = "normal",
    max_pairs: int | None = DEFAULT_MAX_PAIRS,
    max_seconds: float | None = DEFAULT_MAX_SECONDS,
    tail_reduce_every: int = 0,
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``ideal.order``.

    ``strategy`` picks the next critical pair: ``"normal"`` (least lcm),
    ``"sugar"`` (least sugar degree, then lcm) or ``"fifo"`` (creation
    order).  All strategies return the same reduced basis; only the work
    differs.  Raises :class:`BudgetExhausted` when either budget runs out.
    """
    order = ideal.order
    engine = _Engine(ideal.nvars, order, strategy, max_pairs, max_seconds, tail_reduce_every)
    gens = [_to_integer_terms(g) for g in ideal.generators]
    # feed generators smallest-first so early elements reduce later ones
    gens.sort(key=lambda t: order.key(max(t, key=order.key)))
    reduced = engine.run(gens)
    elements = [_monic(t, order, ideal.nvars) for t in reduced]
    if any(g.is_constant() for g in elements):
        elements = [Polynomial.one(ideal.nvars)]
    elements.sort(key=lambda g: order.key(g.leading_monomial(order)))
    engine.stats.elapsed_seconds = engine.elapsed()
    basis = GroebnerBasis(tuple(elements), order, ideal.nvars, engine.stats)
    if _checks.enabled:
        _checks.notify_basis(basis, ideal)
    return basis


def groebner_basis(polys: Iterable[Polynomial], order: MonomialOrder | str = GREVLEX, nvars: int | None = None, **kwargs) -> GroebnerBasis:
    """Shorthand for ``buchberger(Ideal.of(polys, order, nvars), **kwargs)``."""
    return buchberger(Ideal.of(polys, order, nvars), **kwargs)

"""Defining equations of the SL(2,C) representation variety of a presentation.

Generator ``i`` is sent to the matrix of coordinates
``(x[4i+1], x[4i+2]; x[4i+3], x[4i+4])`` in C^(4n).  Inverse letters use the
adjugate, which is the inverse on the locus where every determinant is 1;
the determinant equations are always part of the system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal
from .polycore import GREVLEX, MonomialOrder, Polynomial
from .presentation import GroupPresentation, Word

__all__ = [
    "MatrixOfPolynomials",
    "Equation",
    "RepresentationIdeal",
    "generator_matrix",
    "inverse_matrix",
    "evaluate_relator",
    "representation_ideal",
    "split_relator_equations",
    "variable_names",
]

ENTRY_NAMES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class MatrixOfPolynomials:
    a: Polynomial
    b: Polynomial
    c: Polynomial
    d: Polynomial

    def __post_init__(self):
        n = self.a.nvars
        if any(e.nvars != n for e in (self.b, self.c, self.d)):
            raise ValueError("matrix entries live in different rings")

    @property
    def nvars(self) -> int:
        return self.a.nvars

    @classmethod
    def identity(cls, nvars: int) -> MatrixOfPolynomials:
        one, zero = Polynomial.one(nvars), Polynomial.zero(nvars)
        return cls(one, zero, zero, one)

    def entries(self) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: MatrixOfPolynomials) -> MatrixOfPolynomials:
        return MatrixOfPolynomials(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> Polynomial:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> MatrixOfPolynomials:
        return MatrixOfPolynomials(self.d, -self.b, -self.c, self.a)

    def evaluate(self, point) -> tuple:
        return tuple(e.evaluate(point) for e in self.entries())


def variable_names(n: int, names: tuple[str, ...] | None = None) -> list[str]:
    """``x1 .. x4n``; the coordinates of generator ``i`` are ``x4i+1 .. x4i+4``."""
    return [f"x{k + 1}" for k in range(4 * n)]


def generator_matrix(i: int, n: int) -> MatrixOfPolynomials:
    if not 0 <= i < n:
        raise IndexError(f"generator index {i} out of range for {n} generators")
    nv = 4 * n
    return MatrixOfPolynomials(*(Polynomial.variable(nv, 4 * i + k) for k in range(4)))


def inverse_matrix(m: MatrixOfPolynomials) -> MatrixOfPolynomials:
    """The adjugate ``(d, -b; -c, a)``."""
    return m.adjugate()


def evaluate_relator(word: Word, n: int) -> MatrixOfPolynomials:
    """Left-to-right matrix product of the word's letters."""
    gens = [generator_matrix(i, n) for i in range(n)]
    invs = [inverse_matrix(g) for g in gens]
    result = MatrixOfPolynomials.identity(4 * n)
    for g, s in word:
        if g >= n:
            raise IndexError(f"letter uses generator {g} but only {n} exist")
        result = result @ (gens[g] if s > 0 else invs[g])
    return result


@dataclass(frozen=True)
class Equation:
    """One generated equation with its provenance.

    ``kind`` is ``"relator"`` (with ``relator`` index and matrix ``entry``
    a/b/c/d) or ``"det"`` (with ``generator`` index).
    """

    kind: str
    polynomial: Polynomial
    relator: int | None = None
    entry: str | None = None
    generator: int | None = None

    @property
    def tag(self) -> str:
        if self.kind == "det":
            return f"det[{self.generator}]"
        return f"rel[{self.relator}].{self.entry}"

    @property
    def tautological(self) -> bool:
        return self.polynomial.is_zero()


@dataclass(frozen=True)
class RepresentationIdeal:
    """The emitted equations, their ideal, and an equal ideal with smaller generators.

    ``working`` is generated by the balanced halves ``u - adj(v)`` of each
    relator ``uv`` plus the determinant equations.  It is the same ideal as
    ``ideal`` (modulo det - 1, ``uv = I`` iff ``u = adj(v)``) but of roughly
    half the degree, which keeps Buchberger's coefficients small.
    """

    presentation: GroupPresentation
    equations: tuple[Equation, ...]
    ideal: Ideal
    working: Ideal

    @property
    def equation_count(self) -> int:
        """All generated equations, tautologies included (always 4m + n)."""
        return len(self.equations)

    @property
    def purged(self) -> tuple[Equation, ...]:
        return tuple(e for e in self.equations if e.tautological)

    @property
    def names(self) -> list[str]:
        return variable_names(self.presentation.n)


def representation_ideal(p: GroupPresentation, order: MonomialOrder | str = GREVLEX) -> RepresentationIdeal:
    """Relator entries ``r - I`` (4 per relator) then ``det - 1`` per generator."""
    n = p.n
    nv = 4 * n
    identity = MatrixOfPolynomials.identity(nv)
    equations: list[Equation] = []
    for j, rel in enumerate(p.relators):
        value = evaluate_relator(rel, n)
        for name, entry, ident in zip(ENTRY_NAMES, value.entries(), identity.entries()):
            equations.append(Equation("relator", entry - ident, relator=j, entry=name))
    for i in range(n):
        det = generator_matrix(i, n).det() - 1
        equations.append(Equation("det", det, generator=i))
    ideal = Ideal(
        tuple(e.polynomial for e in equations if not e.tautological),
        nv,
        MonomialOrder.parse(order),
    )
    split = [f for rel in p.relators for f in split_relator_equations(rel, n)]
    dets = [e.polynomial for e in equations if e.kind == "det"]
    working = Ideal(tuple(split + dets), nv, ideal.order)
    return RepresentationIdeal(p, tuple(equations), ideal, working)


def split_relator_equations(word: Word, n: int) -> list[Polynomial]:
    """Entries of ``u - adj(v)`` where ``word = uv`` and ``u`` is the longer half."""
    letters = word.letters
    half = (len(letters) + 1) // 2
    u = evaluate_relator(Word(letters[:half]), n)
    v = inverse_matrix(evaluate_relator(Word(letters[half:]), n))
    return [x - y for x, y in zip(u.entries(), v.entries())]

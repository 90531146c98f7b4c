"""Finite group presentations, free-group words and Heegaard diagrams.

Text formats::

    gens: a b ; rels: a b a^-1 b^-1, a^2 b^-3
    genus: 2 ; curves: h1, h2

Inverse letters carry a sign rather than a separate symbol, powers expand to
repeated letters, and ``1`` denotes the empty word.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Generator",
    "Word",
    "GroupPresentation",
    "HeegaardDiagram",
    "PresentationSyntaxError",
    "free_reduce",
    "parse_presentation",
    "parse_heegaard",
    "presentation_from_heegaard",
]

Letter = tuple[int, int]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PresentationSyntaxError(ValueError):
    """Malformed presentation text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Generator:
    index: int
    name: str

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("generator index must be nonnegative")
        if not self.name:
            raise ValueError("generator name must be nonempty")


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until none remain (one stack pass)."""
    stack: list[Letter] = []
    for gen, sign in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A word in the free group: a sequence of ``(generator index, +-1)``."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(s)) for g, s in self.letters)
        for g, s in letters:
            if g < 0:
                raise ValueError(f"negative generator index {g}")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> Word:
        """Build a word from ``(generator, power)`` syllables, e.g. ``[(0, 2), (1, -3)]``."""
        letters = []
        for g, e in pairs:
            sign = 1 if e > 0 else -1
            letters.extend([(g, sign)] * abs(e))
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def reduced(self) -> Word:
        return Word(free_reduce(self.letters))

    def is_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(self.letters, self.letters[1:])
        )

    def exponent_sum(self, gen: int) -> int:
        return sum(s for g, s in self.letters if g == gen)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def format(self, names: Sequence[str]) -> str:
        """Render with syllable powers, ``a^2 b^-1``; the empty word prints as ``1``."""
        if not self.letters:
            return "1"
        parts = []
        i = 0
        letters = self.letters
        while i < len(letters):
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            g, s = letters[i]
            power = s * (j - i)
            parts.append(names[g] if power == 1 else f"{names[g]}^{power}")
            i = j
        return " ".join(parts)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(self.relators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for i, g in enumerate(gens):
            if g.index != i:
                raise ValueError(f"generator {g.name!r} has index {g.index}, expected {i}")
        for r in rels:
            if r.max_generator() >= len(gens):
                raise ValueError(f"relator uses generator index {r.max_generator()}")
            if not r.is_reduced():
                raise ValueError("relators must be freely reduced")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @classmethod
    def build(cls, names: Sequence[str], relators: Iterable[Word | Iterable[Letter]]) -> GroupPresentation:
        """Convenience constructor that freely reduces the relators."""
        gens = tuple(Generator(i, n) for i, n in enumerate(names))
        rels = tuple(
            (r if isinstance(r, Word) else Word(tuple(r))).reduced() for r in relators
        )
        return cls(gens, rels)

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return len(self.relators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def length(self) -> int:
        """Generator count plus total relator letter count."""
        return self.n + sum(len(r) for r in self.relators)

    def to_text(self) -> str:
        names = self.names
        rels = ", ".join(r.format(names) for r in self.relators)
        return f"gens: {' '.join(names)} ; rels: {rels}"

    def __str__(self) -> str:
        names = self.names
        rels = ", ".join(r.format(names) for r in self.relators)
        return f"<{', '.join(names)} | {rels}>"


@dataclass(frozen=True)
class HeegaardDiagram:
    genus: int
    curves: tuple[Word, ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        curves = tuple(c.reduced() for c in self.curves)
        for c in curves:
            if c.max_generator() >= self.genus:
                raise ValueError(f"curve uses generator index {c.max_generator()} >= genus")
        object.__setattr__(self, "curves", curves)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"h{i + 1}" for i in range(self.genus))

    def to_text(self) -> str:
        curves = ", ".join(c.format(self.names) for c in self.curves)
        return f"genus: {self.genus} ; curves: {curves}"


def presentation_from_heegaard(diagram: HeegaardDiagram) -> GroupPresentation:
    """One generator per handle, one relator per attaching curve."""
    return GroupPresentation.build(diagram.names, diagram.curves)


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<int>[+-]?[0-9]+)
  | (?P<punct>[:;,^])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PresentationSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, match.group(), line, pos - line_start + 1))
        for i, ch in enumerate(match.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = match.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.tok
        return PresentationSyntaxError(message, tok.line, tok.column)

    def advance(self) -> _Token:
        tok = self.tok
        self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = repr(text) if text is not None else kind
            found = repr(tok.text) if tok.text else "end of input"
            raise self.error(f"expected {wanted}, found {found}")
        return self.advance()

    def keyword(self, word: str):
        tok = self.tok
        if tok.kind != "name" or tok.text != word:
            found = repr(tok.text) if tok.text else "end of input"
            raise self.error(f"expected '{word}:', found {found}")
        self.advance()
        self.expect("punct", ":")

    def at(self, kind: str, text: str | None = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def word(self, lookup: dict[str, int]) -> Word:
        if self.at("int", "1"):
            self.advance()
            return Word()
        if not self.at("name"):
            found = repr(self.tok.text) if self.tok.text else "end of input"
            raise self.error(f"expected a generator name or '1', found {found}")
        letters: list[Letter] = []
        while self.at("name"):
            tok = self.advance()
            if tok.text not in lookup:
                raise self.error(f"undeclared generator {tok.text!r}", tok)
            power = 1
            if self.at("punct", "^"):
                self.advance()
                power = int(self.expect("int").text)
            sign = 1 if power > 0 else -1
            letters.extend([(lookup[tok.text], sign)] * abs(power))
        return Word(free_reduce(letters))

    def word_list(self, lookup: dict[str, int]) -> list[Word]:
        words: list[Word] = []
        if self.at("eof"):
            return words
        words.append(self.word(lookup))
        while self.at("punct", ","):
            self.advance()
            words.append(self.word(lookup))
        if self.at("punct", ";"):
            self.advance()
        if not self.at("eof"):
            raise self.error(f"unexpected {self.tok.text!r}")
        return words


def parse_presentation(text: str) -> GroupPresentation:
    """Parse ``gens: <names> ; rels: <word>, <word>, ...``.

    An empty relator list (``rels:`` with nothing after it) is accepted.
    """
    p = _Parser(text)
    p.keyword("gens")
    names: list[str] = []
    while p.at("name"):
        tok = p.advance()
        if tok.text in names:
            raise p.error(f"duplicate generator {tok.text!r}", tok)
        names.append(tok.text)
    if not names:
        raise p.error("empty generator name: at least one generator is required")
    p.expect("punct", ";")
    p.keyword("rels")
    lookup = {name: i for i, name in enumerate(names)}
    relators = p.word_list(lookup)
    return GroupPresentation.build(names, relators)


def parse_heegaard(text: str) -> HeegaardDiagram:
    """Parse ``genus: g ; curves: <word>, ...`` over generators ``h1..hg``.

    For genus at most 26 the letters ``a, b, c, ...`` are accepted as aliases
    of ``h1, h2, h3, ...``.
    """
    p = _Parser(text)
    p.keyword("genus")
    tok = p.expect("int")
    genus = int(tok.text)
    if genus < 0:
        raise p.error("genus must be nonnegative", tok)
    p.expect("punct", ";")
    p.keyword("curves")
    lookup = {f"h{i + 1}": i for i in range(genus)}
    if genus <= 26:
        for i in range(genus):
            lookup.setdefault(chr(ord("a") + i), i)
    curves = p.word_list(lookup)
    return HeegaardDiagram(genus, tuple(curves))


def is_valid_name(name: str) -> bool:
    return bool(_NAME_RE.match(name))

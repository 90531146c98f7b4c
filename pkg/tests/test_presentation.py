import pytest
from hypothesis import given, strategies as st

from s3recog.presentation import (
    GroupPresentation,
    HeegaardDiagram,
    PresentationSyntaxError,
    Word,
    free_reduce,
    parse_heegaard,
    parse_presentation,
    presentation_from_heegaard,
)

A, a, B, b = (0, -1), (0, 1), (1, -1), (1, 1)

letters = st.tuples(st.integers(0, 2), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=20).map(lambda ls: Word(tuple(ls)))


def test_parse_single_relator():
    p = parse_presentation("gens: a ; rels: a")
    assert (p.n, p.m) == (1, 1)
    assert p.relators[0].letters == (a,)


def test_parse_commutator():
    p = parse_presentation("gens: a b ; rels: a b a^-1 b^-1")
    assert (p.n, p.m) == (2, 1)
    assert p.relators[0].letters == (a, b, A, B)


def test_parse_cancelling_relator_is_kept_empty():
    p = parse_presentation("gens: a ; rels: a a^-1")
    assert p.m == 1
    assert len(p.relators[0]) == 0


def test_parse_powers_and_one():
    p = parse_presentation("gens: x y ; rels: x^3 y^-2, 1, x^0")
    assert p.relators[0].letters == (( 0, 1),) * 3 + ((1, -1),) * 2
    assert len(p.relators[1]) == 0 and len(p.relators[2]) == 0


def test_parse_multichar_names_and_comments():
    text = """
    # Poincare sphere
    gens: s t1 ;
    rels: s t1 s t1 s^-3,
          s t1 s t1 t1^-5
    """
    p = parse_presentation(text)
    assert p.names == ("s", "t1")
    assert [len(r) for r in p.relators] == [7, 7]


def test_parse_empty_relator_list():
    p = parse_presentation("gens: a b ; rels:")
    assert (p.n, p.m) == (2, 0)


def test_parse_reduces_relators():
    p = parse_presentation("gens: a b ; rels: a b b^-1 a^-1 b")
    assert p.relators[0].letters == (b,)


def test_undeclared_generator_reports_position():
    with pytest.raises(PresentationSyntaxError) as err:
        parse_presentation("gens: a ;\nrels: a c")
    assert "undeclared generator 'c'" in str(err.value)
    assert (err.value.line, err.value.column) == (2, 9)


def test_syntax_error_reports_position():
    with pytest.raises(PresentationSyntaxError) as err:
        parse_presentation("gens: a ; rels: a ^ ^")
    assert err.value.line == 1
    assert err.value.column == 21


@pytest.mark.parametrize(
    "text",
    [
        "gens: ; rels: 1",
        "gens a ; rels: a",
        "gens: a a ; rels: a",
        "gens: a ; rels: a,",
        "gens: a ; rels: a $",
        "rels: a",
        "",
    ],
)
def test_malformed_inputs(text):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(text)


def test_free_reduce_examples():
    assert free_reduce([a, A, b]) == (b,)
    assert free_reduce([]) == ()
    assert free_reduce([a, b, B, A]) == ()


@given(words)
def test_free_reduce_idempotent(w):
    once = free_reduce(w.letters)
    assert free_reduce(once) == once
    assert Word(once).is_reduced()


@given(words)
def test_word_times_inverse_reduces_to_empty(w):
    assert free_reduce((w * w.inverse()).letters) == ()


@given(st.lists(words, max_size=4))
def test_print_parse_round_trip(rels):
    p = GroupPresentation.build(["a", "b", "c"], rels)
    again = parse_presentation(p.to_text())
    assert again == p


def test_presentation_rejects_unreduced_relator():
    with pytest.raises(ValueError):
        GroupPresentation.build(["a"], []).__class__(
            parse_presentation("gens: a ; rels: a").generators, (Word((a, A)),)
        )


def test_heegaard_genus_one():
    d = parse_heegaard("genus: 1 ; curves: h1")
    p = presentation_from_heegaard(d)
    assert (p.n, p.m) == (1, 1)
    assert p.relators[0].letters == (a,)


def test_heegaard_genus_two_with_letter_aliases():
    d = parse_heegaard("genus: 2 ; curves: a, b")
    p = presentation_from_heegaard(d)
    assert p.names == ("h1", "h2")
    assert [r.letters for r in p.relators] == [(a,), (b,)]


def test_heegaard_without_curves():
    p = presentation_from_heegaard(parse_heegaard("genus: 1 ; curves:"))
    assert (p.n, p.m) == (1, 0)


def test_heegaard_curve_out_of_range():
    with pytest.raises(PresentationSyntaxError):
        parse_heegaard("genus: 1 ; curves: h2")
    with pytest.raises(ValueError):
        HeegaardDiagram(1, (Word(((1, 1),)),))


@given(st.integers(0, 3), st.lists(words, max_size=4))
def test_heegaard_presentation_length_bound(genus, curves):
    curves = [Word(tuple((g % max(genus, 1), s) for g, s in c)) for c in curves] if genus else []
    d = HeegaardDiagram(genus, tuple(curves))
    p = presentation_from_heegaard(d)
    k = sum(len(c) for c in curves)
    assert p.length <= genus + k
    assert p.n == genus and p.m == len(curves)


def test_heegaard_round_trip():
    d = parse_heegaard("genus: 2 ; curves: h1 h2 h1^-1, h2^3")
    assert parse_heegaard(d.to_text()) == d

import random

import hypothesis.strategies as st
from hypothesis import given, settings

from flcalc import (
    Atom,
    BOT,
    CoImp,
    CoNeg,
    IDENTITY,
    Imp,
    Neg,
    ONE,
    Plus,
    SIGMA,
    Sequent,
    Tensor,
    TOP,
    With,
    ZERO,
    apply_symbol_map,
    parse_sequent,
    size,
    subformula_closure,
)

A, B, C = Atom("A"), Atom("B"), Atom("C")
a1, a2 = Atom("a1"), Atom("a2")

leaves = st.one_of(st.sampled_from([ONE, ZERO, TOP, BOT]),
                   st.sampled_from("ABCD").map(Atom))
formulas = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.builds(Neg, kids), st.builds(CoNeg, kids),
        st.builds(Imp, kids, kids), st.builds(CoImp, kids, kids),
        st.builds(Tensor, kids, kids), st.builds(With, kids, kids),
        st.builds(Plus, kids, kids)),
    max_leaves=20)
sequents = st.builds(
    lambda ant, succ: Sequent(tuple(ant), succ),
    st.lists(formulas, max_size=4),
    st.one_of(st.none(), formulas))


def test_size_examples():
    assert size(A) == 1
    assert size(Tensor(A, Plus(B, C))) == 4
    assert size(Imp(Tensor(a1, a2), C)) == 5


def test_sequent_size():
    assert size(Sequent((), None)) == 1
    assert size(Sequent((A,), A)) == 3
    assert size(parse_sequent("A * B, C |- C")) == 6


def test_subformula_closure_examples():
    assert subformula_closure(parse_sequent("A |- A")) == {A}
    assert subformula_closure(parse_sequent("A * B |-")) == {Tensor(A, B), A, B}
    closure = subformula_closure(parse_sequent("A * (B * C) |- (A * B) * C"))
    assert closure == {
        Tensor(A, Tensor(B, C)), Tensor(B, C), Tensor(Tensor(A, B), C),
        Tensor(A, B), A, B, C,
    }
    assert len(closure) == 7


def test_sigma_examples():
    assert apply_symbol_map(SIGMA, Imp(A, B)) == CoImp(A, B)
    assert apply_symbol_map(SIGMA, Tensor(A, B)) == Tensor(A, B)
    f = Imp(Neg(A), B)
    assert apply_symbol_map(SIGMA, apply_symbol_map(SIGMA, f)) == f
    assert apply_symbol_map(SIGMA, Neg(A)) == CoNeg(A)
    assert apply_symbol_map(IDENTITY, Imp(A, B)) == Imp(A, B)


def test_sigma_on_sequent():
    s = parse_sequent("neg A, A -> B |- B <- C")
    image = apply_symbol_map(SIGMA, s)
    assert image == Sequent((CoNeg(A), CoImp(A, B)), Imp(B, C))


@settings(deadline=None)
@given(formulas)
def test_sigma_involution(f):
    assert apply_symbol_map(SIGMA, apply_symbol_map(SIGMA, f)) == f


@settings(deadline=None)
@given(formulas)
def test_sigma_preserves_size(f):
    assert size(apply_symbol_map(SIGMA, f)) == size(f)


@settings(deadline=None)
@given(formulas)
def test_closure_is_closed_and_descending(f):
    closure = subformula_closure(f)
    for member in closure:
        assert subformula_closure(member) <= closure
        assert size(member) >= 1
        for sub in subformula_closure(member) - {member}:
            assert size(sub) < size(member)


@settings(deadline=None)
@given(sequents)
def test_sigma_involution_on_sequents(s):
    assert apply_symbol_map(SIGMA, apply_symbol_map(SIGMA, s)) == s


def test_atoms_are_not_identified_up_to_structure():
    # no normalization anywhere: association and order matter
    assert Tensor(A, Tensor(B, C)) != Tensor(Tensor(A, B), C)
    assert Tensor(A, B) != Tensor(B, A)
    assert Sequent((A, B), None) != Sequent((B, A), None)


def test_sequent_accepts_list_antecedent():
    assert Sequent([A, B], C).antecedent == (A, B)

"""Acceptance suite: one test per criterion, each printing PASS or FAIL.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines as they complete.
"""

import contextlib
import random
import time
from pathlib import Path

from flcalc import (
    Atom,
    BOT,
    CoNeg,
    CutBudget,
    Imp,
    Neg,
    ONE,
    Plus,
    Provable,
    SIGMA,
    Sequent,
    System,
    Tensor,
    TOP,
    Unprovable,
    With,
    ZERO,
    apply_symbol_map,
    check_proof,
    decide_cut_free,
    embed_to_fl,
    load_corpus,
    parse_formula,
    parse_proof,
    parse_sequent,
    premise_candidates,
    print_formula,
    print_proof,
    print_sequent,
    run_corpus,
    search_with_cuts,
    size,
    subformula_closure,
    translate_to_fl_prime,
)
from flcalc.calculus import RULE_NAMES

from oracle_saturation import enumerate_sequents, forward_closure
from proofgen import random_formula, random_proof, random_sequent

DATA = Path(__file__).parent / "data"

A, B = Atom("A"), Atom("B")


@contextlib.contextmanager
def criterion(num, title):
    try:
        yield
    except BaseException:
        print(f"acceptance {num} ({title}): FAIL", flush=True)
        raise
    print(f"acceptance {num} ({title}): PASS", flush=True)


def _decide(sys, text):
    started = time.monotonic()
    outcome = decide_cut_free(sys, parse_sequent(text))
    elapsed = time.monotonic() - started
    return isinstance(outcome, Provable), elapsed, outcome


def test_criterion_1_derivability_matrix():
    expectations = [
        ("A * (B * C) |- (A * B) * C", System.FL, True),
        ("A * (B * C) |- (A * B) * C", System.FLP, False),
        ("(A * B) * C |- A * (B * C)", System.FL, True),
        ("(A * B) * C |- A * (B * C)", System.FLP, True),
        ("A * (B \\/ C) |- (A * B) \\/ (A * C)", System.FL, True),
        ("A * (B \\/ C) |- (A * B) \\/ (A * C)", System.FLP, False),
        ("(A * B) \\/ (A * C) |- A * (B \\/ C)", System.FL, True),
        ("(A * B) \\/ (A * C) |- A * (B \\/ C)", System.FLP, True),
    ]
    with criterion(1, "derivability matrix"):
        for text, sysname, expected in expectations:
            provable, elapsed, outcome = _decide(sysname, text)
            assert provable == expected, (text, sysname)
            assert elapsed < 1.0, (text, sysname, elapsed)
            if provable:
                assert check_proof(sysname, outcome.witness).accepted


def test_criterion_2_with_cut_recovery():
    cases = [
        ("A * (B * C) |- (A * B) * C", "A -> ((A * B) * C)"),
        ("A * (B \\/ C) |- (A * B) \\/ (A * C)", "A -> ((A * B) \\/ (A * C))"),
    ]
    with criterion(2, "with-cut recovery"):
        for goal_text, key_text in cases:
            goal = parse_sequent(goal_text)
            budget = CutBudget((parse_formula(key_text),), 12)
            started = time.monotonic()
            outcome = search_with_cuts(System.FLP, goal, budget)
            elapsed = time.monotonic() - started
            assert isinstance(outcome, Provable), goal_text
            assert elapsed < 5.0, (goal_text, elapsed)
            assert check_proof(System.FLP, outcome.witness).accepted


def test_criterion_3_corpus_and_mutations():
    with criterion(3, "corpus figures and mutation fixtures"):
        report = run_corpus()
        assert report.ok
        assert len(report.entries) >= 12
        for name in ("mutation-premise-swap", "mutation-wrong-label",
                     "mutation-wrong-split"):
            tree = parse_proof(
                (DATA / f"{name}.proof").read_text(encoding="utf-8"))
            for sysname in (System.FL, System.FLP):
                assert not check_proof(sysname, tree).accepted, name


def test_criterion_4_embedding():
    with criterion(4, "embedding flp corpus proofs into fl"):
        flp_entries = [e for e in load_corpus() if e.system is System.FLP]
        assert flp_entries
        for entry in flp_entries:
            embedded = embed_to_fl(entry.proof)
            assert check_proof(System.FL, embedded).accepted, entry.entry_id
            assert embedded.conclusion == apply_symbol_map(
                SIGMA, entry.proof.conclusion)


def test_criterion_5_translation():
    with criterion(5, "translation of the cut-free fl corpus proofs"):
        entries = {e.entry_id: e for e in load_corpus()}
        for entry_id in ("assoc-fl-cutfree", "distrib-fl-cutfree"):
            proof = entries[entry_id].proof
            # exactly one node carries a nonempty forbidden context in
            # each figure (the step below the root)
            offending = 1
            for strategy in ("tensor", "curried"):
                trace = translate_to_fl_prime(proof, strategy=strategy)
                assert check_proof(System.FLP, trace.output).accepted
                assert len(trace.cases_applied) == offending
                assert trace.cuts_introduced == offending, (entry_id, strategy)


def _battery_sets():
    t = parse_formula
    return [
        subformula_closure(t("A * (B * B)")) | subformula_closure(t("(A * B) * B")),
        subformula_closure(t("A * (B \\/ A)"))
        | subformula_closure(t("(A * B) \\/ (A * A)")),
        subformula_closure(t("A -> B")) | subformula_closure(t("B <- A"))
        | subformula_closure(t("neg A")) | subformula_closure(t("coneg B"))
        | {ONE, ZERO},
        subformula_closure(t("A /\\ B")) | subformula_closure(t("A \\/ B"))
        | {TOP, BOT},
    ]


def test_criterion_6_oracle_equivalence():
    with criterion(6, "oracle equivalence on subformula-closed batteries"):
        started = time.monotonic()
        instances = 0
        for universe in _battery_sets():
            # each universe is subformula-closed by construction
            for f in universe:
                assert subformula_closure(f) <= universe
            goals = enumerate_sequents(universe, 7)
            for sysname in (System.FL, System.FLP):
                closure = forward_closure(sysname, universe, 7)
                for goal in goals:
                    got = isinstance(decide_cut_free(sysname, goal), Provable)
                    assert got == (goal in closure), (sysname,
                                                      print_sequent(goal))
                    instances += 1
        elapsed = time.monotonic() - started
        assert instances > 2000
        assert elapsed < 300.0, elapsed
        print(f"  (criterion 6: {instances} instances in {elapsed:.1f}s)",
              flush=True)


def test_criterion_7_randomized_properties():
    with criterion(7, "randomized properties, >=1000 cases each"):
        rng = random.Random(20260810)

        # parse/print identity: formulas
        for _ in range(1000):
            f = random_formula(rng, max_depth=6)
            assert parse_formula(print_formula(f)) == f
        # parse/print identity: sequents
        for _ in range(1000):
            s = random_sequent(rng, max_depth=4, max_antecedent=4)
            assert parse_sequent(print_sequent(s)) == s
        # parse/print identity: proofs
        for k in range(1000):
            sysname = System.FL if k % 2 else System.FLP
            tree = random_proof(sysname, rng, steps=6, allow_cuts=(k % 5 == 0))
            assert parse_proof(print_proof(tree)) == tree

        # sigma involution
        for _ in range(1000):
            f = random_formula(rng, max_depth=6)
            assert apply_symbol_map(SIGMA, apply_symbol_map(SIGMA, f)) == f

        # strict descent over generated rule instances
        instances = 0
        while instances < 1000:
            s = random_sequent(rng, max_depth=3, max_antecedent=3)
            for sysname in (System.FL, System.FLP):
                for rule in RULE_NAMES:
                    if rule == "cut":
                        continue
                    for premises in premise_candidates(sysname, rule, s):
                        for premise in premises:
                            assert size(premise) < size(s)
                        instances += 1

        # subformula property and soundness of search witnesses
        witnesses = 0
        for k in range(1000):
            sysname = System.FL if k % 2 else System.FLP
            if k % 5 < 3:
                goal = random_proof(sysname, rng, steps=5).conclusion
            else:
                goal = random_sequent(rng, max_depth=2, max_antecedent=2)
            outcome = decide_cut_free(sysname, goal)
            if k % 5 < 3:
                assert isinstance(outcome, Provable)  # completeness
            if isinstance(outcome, Provable):
                witnesses += 1
                assert check_proof(sysname, outcome.witness).accepted
                closure = subformula_closure(goal)
                _check_subformulas(outcome.witness, closure)
        assert witnesses >= 600


def _check_subformulas(tree, closure):
    assert subformula_closure(tree.conclusion) <= closure
    for child in tree.premises:
        _check_subformulas(child, closure)


def test_criterion_8_sigma_discrepancy_probe():
    with criterion(8, "symbol-correspondence probe"):
        probe = "A -> B, A |- B"
        twisted = "A <- B, A |- B"
        assert isinstance(decide_cut_free(System.FL, parse_sequent(probe)),
                          Provable)
        assert isinstance(decide_cut_free(System.FLP, parse_sequent(probe)),
                          Unprovable)
        assert isinstance(decide_cut_free(System.FLP, parse_sequent(twisted)),
                          Provable)

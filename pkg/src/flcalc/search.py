"""Backward proof search.

``decide_cut_free`` is a complete decision procedure for cut-free
derivability: every non-cut rule read backward yields strictly smaller
premises, so exhaustive backward search terminates, and memoizing failed
subgoals is sound because derivability of a sequent does not depend on
where it occurs.

``search_with_cuts`` additionally tries the cut rule against a
user-supplied pool of cut formulas, bounded by a maximum proof height.
It reports ``ResourceExceeded`` when the bound pruned some open branch
and ``Unprovable`` only when the bounded space was exhausted cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import ProofTree, System, premise_candidates
from .formulas import Formula, Sequent


@dataclass(frozen=True)
class Provable:
    witness: ProofTree


@dataclass(frozen=True)
class Unprovable:
    pass


@dataclass(frozen=True)
class ResourceExceeded:
    limit: str


SearchOutcome = Provable | Unprovable | ResourceExceeded


@dataclass(frozen=True)
class CutBudget:
    pool: tuple[Formula, ...]
    depth: int

    def __post_init__(self) -> None:
        if not isinstance(self.pool, tuple):
            object.__setattr__(self, "pool", tuple(self.pool))
        if self.depth < 1:
            raise ValueError("cut budget depth must be at least 1")


# Deterministic try order: axioms, unary right rules, unary left rules,
# branching rules.  Within each group, rule-table order.
_SEARCH_ORDER: tuple[str, ...] = (
    "id", "oneR", "zeroL", "topR", "botL",
    "zeroW", "impR", "coimpR", "negR", "conegR", "orR1", "orR2",
    "oneW", "negL", "conegL", "tensL", "andL1", "andL2",
    "impL", "coimpL", "tensR", "andR", "orL",
)


def decide_cut_free(sys: System, goal: Sequent) -> SearchOutcome:
    """Decide cut-free derivability of ``goal``; never ResourceExceeded.

    Deterministic: rules in the fixed order, instantiations in the fixed
    enumeration order, first completed proof returned.
    """
    memo: dict[Sequent, ProofTree | None] = {}

    def solve(seq: Sequent) -> ProofTree | None:
        if seq in memo:
            return memo[seq]
        for rule in _SEARCH_ORDER:
            for premises in premise_candidates(sys, rule, seq):
                subtrees = []
                for p in premises:
                    sub = solve(p)
                    if sub is None:
                        break
                    subtrees.append(sub)
                else:
                    tree = ProofTree(rule, seq, tuple(subtrees))
                    memo[seq] = tree
                    return tree
        memo[seq] = None
        return None

    witness = solve(goal)
    return Provable(witness) if witness is not None else Unprovable()


def proof_height(tree: ProofTree) -> int:
    """Tree height counting leaves: a leaf has height 1."""
    if not tree.premises:
        return 1
    return 1 + max(proof_height(p) for p in tree.premises)


def search_with_cuts(sys: System, goal: Sequent,
                     budget: CutBudget) -> SearchOutcome:
    """Bounded backward search admitting cuts on the budget's formula pool.

    Cut candidates come after all non-cut rules, ordered by pool position,
    then by the two antecedent split points ascending.
    """
    pool = budget.pool
    success: dict[Sequent, tuple[ProofTree, int]] = {}
    failed_clean: set[Sequent] = set()
    failed_pruned: dict[Sequent, int] = {}

    def cut_candidates(seq: Sequent):
        ant = seq.antecedent
        n = len(ant)
        for formula in pool:
            for k in range(n + 1):
                for m in range(k, n + 1):
                    yield (Sequent(ant[k:m], formula),
                           Sequent(ant[:k] + (formula,) + ant[m:], seq.succedent))

    def solve(seq: Sequent, remaining: int) -> tuple[ProofTree | None, bool]:
        """Returns (witness or None, whether the bound pruned anything)."""
        if seq in failed_clean:
            return None, False
        hit = success.get(seq)
        if hit is not None and hit[1] <= remaining:
            return hit[0], False
        if remaining <= 0:
            return None, True
        if failed_pruned.get(seq, -1) >= remaining:
            return None, True

        pruned = False

        def try_candidates(rule: str, candidates) -> ProofTree | None:
            nonlocal pruned
            for premises in candidates:
                subtrees = []
                for p in premises:
                    sub, sub_pruned = solve(p, remaining - 1)
                    if sub is None:
                        pruned = pruned or sub_pruned
                        break
                    subtrees.append(sub)
                else:
                    return ProofTree(rule, seq, tuple(subtrees))
            return None

        for rule in _SEARCH_ORDER:
            tree = try_candidates(rule, premise_candidates(sys, rule, seq))
            if tree is not None:
                success[seq] = (tree, proof_height(tree))
                return tree, False
        if pool:
            tree = try_candidates("cut", cut_candidates(seq))
            if tree is not None:
                success[seq] = (tree, proof_height(tree))
                return tree, False

        if pruned:
            failed_pruned[seq] = max(failed_pruned.get(seq, 0), remaining)
        else:
            failed_clean.add(seq)
        return None, pruned

    witness, pruned = solve(goal, budget.depth)
    if witness is not None:
        return Provable(witness)
    if pruned:
        return ResourceExceeded(f"proof height limit {budget.depth}")
    return Unprovable()

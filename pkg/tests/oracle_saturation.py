"""Independent brute-force derivability oracle.

Forward saturation: take every sequent of bounded size over a
subformula-closed formula universe, mark the axiom instances, and close
the set under forward application of all non-cut rules until a fixpoint.
A goal is cut-free derivable iff it lands in the closure (by strict
descent and the subformula property, any cut-free proof of a goal lives
entirely inside the goal's own universe and size bound).

The rules here are written forward and independently of the package's
backward instantiation code on purpose; only the formula types and the
size measure are shared.
"""

from __future__ import annotations

from collections import deque

from flcalc.calculus import System
from flcalc.formulas import (
    BOT,
    CoImp,
    CoNeg,
    Formula,
    Imp,
    Neg,
    ONE,
    Plus,
    Sequent,
    Tensor,
    TOP,
    With,
    ZERO,
    size,
    subformula_closure,
)


def enumerate_sequents(universe, max_size: int) -> list[Sequent]:
    """All sequents with formulas from ``universe`` and size <= max_size."""
    formulas = sorted(universe, key=lambda f: (size(f), repr(f)))
    results: list[Sequent] = []

    def ants(budget: int, prefix: tuple[Formula, ...]):
        yield prefix
        for f in formulas:
            fs = size(f)
            if fs > budget:
                continue
            yield from ants(budget - fs, prefix + (f,))

    for succ in [None, *formulas]:
        budget = max_size - 1 - (size(succ) if succ is not None else 0)
        if budget < 0:
            continue
        for ant in ants(budget, ()):
            results.append(Sequent(ant, succ))
    return results


def forward_closure(sys: System, universe, max_size: int) -> set[Sequent]:
    universe = frozenset(universe)
    flp = sys is System.FLP
    bound = max_size

    withs = [f for f in universe if isinstance(f, With)]
    pluses = [f for f in universe if isinstance(f, Plus)]

    derived: set[Sequent] = set()
    queue: deque[Sequent] = deque()

    def add(ant: tuple[Formula, ...], succ: Formula | None) -> None:
        seq = Sequent(ant, succ)
        if seq in derived or size(seq) > bound:
            return
        derived.add(seq)
        queue.append(seq)

    # axioms, found by scanning the whole bounded universe of sequents
    for seq in enumerate_sequents(universe, max_size):
        ant, succ = seq.antecedent, seq.succedent
        if succ is not None and ant == (succ,):
            add(ant, succ)  # id
        if ant == () and succ == ONE:
            add(ant, succ)  # oneR
        if ant == (ZERO,) and succ is None:
            add(ant, succ)  # zeroL
        if succ == TOP:
            add(ant, succ)  # topR
        if flp:
            if ant and ant[0] == BOT:
                add(ant, succ)  # botL, principal leftmost
        elif BOT in ant:
            add(ant, succ)  # botL, principal anywhere

    def unary(seq: Sequent) -> None:
        ant, succ = seq.antecedent, seq.succedent
        # oneW
        if ONE in universe:
            positions = (0,) if flp else range(len(ant) + 1)
            for i in positions:
                add(ant[:i] + (ONE,) + ant[i:], succ)
        # zeroW
        if succ is None and ZERO in universe:
            add(ant, ZERO)
        if ant and succ is not None:
            f = Imp(ant[0], succ) if flp else Imp(ant[-1], succ)
            if f in universe:
                add(ant[1:] if flp else ant[:-1], f)
            f = CoImp(ant[-1], succ) if flp else CoImp(ant[0], succ)
            if f in universe:
                add(ant[:-1] if flp else ant[1:], f)
        if ant and succ is None:
            f = Neg(ant[0]) if flp else Neg(ant[-1])
            if f in universe:
                add(ant[1:] if flp else ant[:-1], f)
            f = CoNeg(ant[-1]) if flp else CoNeg(ant[0])
            if f in universe:
                add(ant[:-1] if flp else ant[1:], f)
        if succ is not None:
            if Neg(succ) in universe:
                if flp:
                    add(ant + (Neg(succ),), None)
                else:
                    add((Neg(succ),) + ant, None)
            if CoNeg(succ) in universe:
                if flp:
                    add((CoNeg(succ),) + ant, None)
                else:
                    add(ant + (CoNeg(succ),), None)
        # tensL
        pairs = ((0,) if len(ant) >= 2 else ()) if flp else range(len(ant) - 1)
        for i in pairs:
            f = Tensor(ant[i], ant[i + 1])
            if f in universe:
                add(ant[:i] + (f,) + ant[i + 2:], succ)
        # andL
        spots = ((0,) if ant else ()) if flp else range(len(ant))
        for i in spots:
            for w in withs:
                if w.left == ant[i]:
                    add(ant[:i] + (w,) + ant[i + 1:], succ)
                if w.right == ant[i]:
                    add(ant[:i] + (w,) + ant[i + 1:], succ)
        # orR
        if succ is not None:
            for p in pluses:
                if p.left == succ or p.right == succ:
                    add(ant, p)

    def binary(s1: Sequent, s2: Sequent) -> None:
        a1, c1 = s1.antecedent, s1.succedent
        a2, c2 = s2.antecedent, s2.succedent
        if c1 is not None and c2 is not None:
            f = Tensor(c1, c2)
            if f in universe:
                add(a1 + a2, f)
            if a1 == a2:
                f = With(c1, c2)
                if f in universe:
                    add(a1, f)
        # orL: s1 holds the left disjunct occurrence, s2 the right one
        if c1 == c2 and a1 and a2 and len(a1) == len(a2):
            spots = (0,) if flp else range(len(a1))
            for i in spots:
                if a1[:i] == a2[:i] and a1[i + 1:] == a2[i + 1:]:
                    f = Plus(a1[i], a2[i])
                    if f in universe:
                        add(a1[:i] + (f,) + a1[i + 1:], c1)
        # impL / coimpL: s1 proves the argument, s2 consumes the result
        if c1 is not None and a2:
            spots = (0,) if flp else range(len(a2))
            for j in spots:
                f = Imp(c1, a2[j])
                if f in universe:
                    if flp:
                        add(a1 + (f,) + a2[1:], c2)
                    else:
                        add(a2[:j] + (f,) + a1 + a2[j + 1:], c2)
                f = CoImp(c1, a2[j])
                if f in universe:
                    if flp:
                        add((f,) + a1 + a2[1:], c2)
                    else:
                        add(a2[:j] + a1 + (f,) + a2[j + 1:], c2)

    while queue:
        seq = queue.popleft()
        unary(seq)
        for other in list(derived):
            binary(seq, other)
            if other != seq:
                binary(other, seq)
    return derived


def oracle_decide(sys: System, goal: Sequent) -> bool:
    """Per-goal oracle: closure over the goal's own subformula universe."""
    closure = forward_closure(sys, subformula_closure(goal), size(goal))
    return goal in closure

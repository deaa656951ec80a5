"""Proof translations between the two systems.

``embed_to_fl`` maps an flp proof to an fl proof of the symbol-swapped
sequent: every flp rule instance is, after swapping the two implications
and the two negations, an instance of the correspondingly renamed fl rule
with empty extra contexts.

``translate_to_fl_prime`` is the converse direction.  An fl left rule
whose principal formula sits behind a nonempty context cannot be replayed
directly in flp; the context is "curried away" instead: the translated
premise derives the context-free sequent with a keyed succedent, the rule
applies leftmost, and one cut against a small gadget proof restores the
context.  Two key shapes are available:

* ``tensor``: the context is folded into one multiplicative conjunction
  and the key is a single implication (one cut per repaired node);
* ``curried``: the context becomes a chain of implications, at the cost
  of one extra inner cut per context formula beyond the first.

Empty-succedent nodes use the left negation in place of the implication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import ProofTree, System, check_proof
from .formulas import (
    BOT,
    CoImp,
    Formula,
    Imp,
    Neg,
    ONE,
    Plus,
    SIGMA,
    Sequent,
    Tensor,
    With,
    apply_symbol_map,
)

SIGMA_RULE_MAP: dict[str, str] = {
    "impL": "coimpL", "coimpL": "impL",
    "impR": "coimpR", "coimpR": "impR",
    "negL": "conegL", "conegL": "negL",
    "negR": "conegR", "conegR": "negR",
}


def sigma_rule_name(rule: str) -> str:
    return SIGMA_RULE_MAP.get(rule, rule)


@dataclass(frozen=True)
class TranslationTrace:
    output: ProofTree
    cuts_introduced: int
    cases_applied: tuple[tuple[tuple[int, ...], str], ...]


def _id(f: Formula) -> ProofTree:
    return ProofTree("id", Sequent((f,), f))


def _fold_right(formulas: tuple[Formula, ...]) -> Formula:
    acc = formulas[-1]
    for f in reversed(formulas[:-1]):
        acc = Tensor(f, acc)
    return acc


def _fold_left(formulas: tuple[Formula, ...]) -> Formula:
    acc = formulas[0]
    for f in formulas[1:]:
        acc = Tensor(acc, f)
    return acc


def _tens_proof_right(formulas: tuple[Formula, ...]) -> ProofTree:
    if len(formulas) == 1:
        return _id(formulas[0])
    sub = _tens_proof_right(formulas[1:])
    return ProofTree("tensR", Sequent(formulas, _fold_right(formulas)),
                     (_id(formulas[0]), sub))


def _tens_proof_left(formulas: tuple[Formula, ...]) -> ProofTree:
    if len(formulas) == 1:
        return _id(formulas[0])
    sub = _tens_proof_left(formulas[:-1])
    return ProofTree("tensR", Sequent(formulas, _fold_left(formulas)),
                     (sub, _id(formulas[-1])))


def curry_context(ctx: list[Formula] | tuple[Formula, ...],
                  goal: Formula) -> Formula:
    """Key formula for a left context: ``goal`` for an empty context,
    ``a -> goal`` for one formula, otherwise the right-nested fold of the
    context under ``*`` implying ``goal``."""
    ctx = tuple(ctx)
    if not ctx:
        return goal
    if len(ctx) == 1:
        return Imp(ctx[0], goal)
    return Imp(_fold_right(ctx), goal)


def context_gadget(ctx: list[Formula] | tuple[Formula, ...],
                   goal: Formula) -> ProofTree:
    """Cut-free flp proof of ``ctx, curry_context(ctx, goal) |- goal``."""
    ctx = tuple(ctx)
    if not ctx:
        raise ValueError("context gadget needs a nonempty context")
    key = curry_context(ctx, goal)
    return ProofTree("impL", Sequent(ctx + (key,), goal),
                     (_tens_proof_right(ctx), _id(goal)))


def embed_to_fl(p: ProofTree) -> ProofTree:
    """Relabel and symbol-swap an flp proof into an fl proof of the
    sigma-image sequent."""
    report = check_proof(System.FLP, p)
    if not report.accepted:
        raise ValueError(
            f"input is not a valid flp proof: {report.reason} at {report.path}")

    def convert(node: ProofTree) -> ProofTree:
        return ProofTree(sigma_rule_name(node.rule),
                         apply_symbol_map(SIGMA, node.conclusion),
                         tuple(convert(c) for c in node.premises))

    out = convert(p)
    verify = check_proof(System.FL, out)
    if not verify.accepted:  # pragma: no cover - structural guarantee
        raise RuntimeError(
            f"embedding produced an invalid fl proof: {verify.reason}")
    return out


def _find_unary_left_split(rule: str, concl: Sequent,
                           premise: Sequent) -> tuple[int, Formula]:
    """Position of the principal formula of an fl unary left rule, matched
    against the actual premise."""
    ant = concl.antecedent
    for i, f in enumerate(ant):
        if rule == "oneW" and f == ONE:
            if premise == Sequent(ant[:i] + ant[i + 1:], concl.succedent):
                return i, f
        elif rule == "tensL" and isinstance(f, Tensor):
            if premise == Sequent(ant[:i] + (f.left, f.right) + ant[i + 1:],
                                  concl.succedent):
                return i, f
        elif rule == "andL1" and isinstance(f, With):
            if premise == Sequent(ant[:i] + (f.left,) + ant[i + 1:],
                                  concl.succedent):
                return i, f
        elif rule == "andL2" and isinstance(f, With):
            if premise == Sequent(ant[:i] + (f.right,) + ant[i + 1:],
                                  concl.succedent):
                return i, f
    raise RuntimeError(f"no fl instantiation of {rule} matches its premise")


def _find_orl_split(concl: Sequent, p1: Sequent, p2: Sequent) -> int:
    ant = concl.antecedent
    for i, f in enumerate(ant):
        if (isinstance(f, Plus)
                and p1 == Sequent(ant[:i] + (f.left,) + ant[i + 1:], concl.succedent)
                and p2 == Sequent(ant[:i] + (f.right,) + ant[i + 1:], concl.succedent)):
            return i
    raise RuntimeError("no fl instantiation of orL matches its premises")


def _find_impl_split(concl: Sequent, p1: Sequent, p2: Sequent) -> int:
    # fl impL: G1 |- A ; G2, B, G3 |- C  /  G2, A->B, G1, G3 |- C
    ant = concl.antecedent
    g1 = p1.antecedent
    for i, f in enumerate(ant):
        if (isinstance(f, Imp) and f.left == p1.succedent
                and ant[i + 1:i + 1 + len(g1)] == g1
                and p2 == Sequent(ant[:i] + (f.right,) + ant[i + 1 + len(g1):],
                                  concl.succedent)):
            return i
    raise RuntimeError("no fl instantiation of impL matches its premises")


def _find_coimpl_split(concl: Sequent, p1: Sequent, p2: Sequent) -> int:
    # fl coimpL: G1 |- A ; G2, B, G3 |- C  /  G2, G1, A<-B, G3 |- C
    # Returns the length of G2.
    ant = concl.antecedent
    g1 = p1.antecedent
    for i, f in enumerate(ant):
        if not isinstance(f, CoImp) or f.left != p1.succedent:
            continue
        if i < len(g1) or ant[i - len(g1):i] != g1:
            continue
        k = i - len(g1)
        if p2 == Sequent(ant[:k] + (f.right,) + ant[i + 1:], concl.succedent):
            return k
    raise RuntimeError("no fl instantiation of coimpL matches its premises")


class _Translator:
    def __init__(self, strategy: str) -> None:
        if strategy not in ("tensor", "curried"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.strategy = strategy
        self.cuts = 0
        self.cases: list[tuple[tuple[int, ...], str]] = []

    # -- key construction -------------------------------------------------

    def _key(self, prefix: tuple[Formula, ...],
             succ: Formula | None) -> Formula:
        if self.strategy == "tensor":
            folded = _fold_left(prefix)
            return Neg(folded) if succ is None else Imp(folded, succ)
        key = None
        for j, g in enumerate(prefix):
            if j == 0:
                key = Neg(g) if succ is None else Imp(g, succ)
            else:
                key = Imp(g, key)
        return key

    def _peel(self, q: ProofTree, prefix: tuple[Formula, ...],
              succ: Formula | None) -> tuple[ProofTree, Formula]:
        """From ``q`` proving ``prefix, rest |- succ`` build the proof of
        ``rest |- key`` together with the key formula."""
        rest = q.conclusion.antecedent[len(prefix):]
        if self.strategy == "tensor":
            folded = prefix[0]
            cur = q
            for j in range(1, len(prefix)):
                folded = Tensor(folded, prefix[j])
                cur = ProofTree(
                    "tensL",
                    Sequent((folded,) + prefix[j + 1:] + rest, succ), (cur,))
            if succ is None:
                key: Formula = Neg(folded)
                return ProofTree("negR", Sequent(rest, key), (cur,)), key
            key = Imp(folded, succ)
            return ProofTree("impR", Sequent(rest, key), (cur,)), key
        # curried: peel the context formulas one at a time, leftmost first
        cur = q
        key = None
        for j, g in enumerate(prefix):
            if j == 0:
                key = Neg(g) if succ is None else Imp(g, succ)
                rule = "negR" if succ is None else "impR"
            else:
                key = Imp(g, key)
                rule = "impR"
            cur = ProofTree(rule, Sequent(prefix[j + 1:] + rest, key), (cur,))
        return cur, key

    def _gadget(self, prefix: tuple[Formula, ...],
                succ: Formula | None) -> tuple[ProofTree, Formula]:
        """Proof of ``prefix, key |- succ`` matching the keys of _peel."""
        if self.strategy == "tensor":
            folded = _fold_left(prefix)
            if succ is None:
                key: Formula = Neg(folded)
                return ProofTree("negL", Sequent(prefix + (key,), None),
                                 (_tens_proof_left(prefix),)), key
            key = Imp(folded, succ)
            return ProofTree("impL", Sequent(prefix + (key,), succ),
                             (_tens_proof_left(prefix), _id(succ))), key
        tree = None
        key = None
        for j, g in enumerate(prefix):
            if j == 0:
                if succ is None:
                    key = Neg(g)
                    tree = ProofTree("negL", Sequent((g, key), None), (_id(g),))
                else:
                    key = Imp(g, succ)
                    tree = ProofTree("impL", Sequent((g, key), succ),
                                     (_id(g), _id(succ)))
                continue
            prev = key
            key = Imp(g, prev)
            left = ProofTree("impL", Sequent((g, key), prev),
                             (_id(g), _id(prev)))
            tree = ProofTree("cut", Sequent(prefix[:j + 1] + (key,), succ),
                             (left, tree))
            self.cuts += 1
        return tree, key

    def _repair(self, path: tuple[int, ...], rule: str, target: Sequent,
                prefix: tuple[Formula, ...], body: ProofTree) -> ProofTree:
        """Cut ``body`` (proving ``X |- key``) against the context gadget,
        restoring ``prefix`` in front: concludes ``prefix, X |- succ``."""
        gadget, _ = self._gadget(prefix, target.succedent)
        self.cuts += 1
        self.cases.append((path, rule))
        return ProofTree("cut", target, (body, gadget))

    # -- node translation --------------------------------------------------

    def translate(self, node: ProofTree, path: tuple[int, ...]) -> ProofTree:
        rule = node.rule
        concl = node.conclusion
        target = apply_symbol_map(SIGMA, concl)
        qs = tuple(self.translate(c, path + (i,))
                   for i, c in enumerate(node.premises))
        name = sigma_rule_name(rule)

        if rule == "botL":
            i = concl.antecedent.index(BOT)
            if i == 0:
                return ProofTree("botL", target)
            prefix = target.antecedent[:i]
            key = self._key(prefix, target.succedent)
            axiom = ProofTree("botL", Sequent(target.antecedent[i:], key))
            return self._repair(path, rule, target, prefix, axiom)

        if rule in ("oneW", "tensL", "andL1", "andL2"):
            i, principal = _find_unary_left_split(rule, concl,
                                                  node.premises[0].conclusion)
            if i == 0:
                return ProofTree(name, target, qs)
            prefix = target.antecedent[:i]
            body, key = self._peel(qs[0], prefix, target.succedent)
            rest = body.conclusion.antecedent
            if rule == "oneW":
                applied_ant = (ONE,) + rest
            else:
                sf = apply_symbol_map(SIGMA, principal)
                applied_ant = (sf,) + rest[2 if rule == "tensL" else 1:]
            applied = ProofTree(name, Sequent(applied_ant, key), (body,))
            return self._repair(path, rule, target, prefix, applied)

        if rule == "orL":
            i = _find_orl_split(concl, node.premises[0].conclusion,
                                node.premises[1].conclusion)
            if i == 0:
                return ProofTree(name, target, qs)
            prefix = target.antecedent[:i]
            b1, key = self._peel(qs[0], prefix, target.succedent)
            b2, _ = self._peel(qs[1], prefix, target.succedent)
            sf = apply_symbol_map(SIGMA, concl.antecedent[i])
            applied = ProofTree(
                name, Sequent((sf,) + b1.conclusion.antecedent[1:], key),
                (b1, b2))
            return self._repair(path, rule, target, prefix, applied)

        if rule == "impL":
            i = _find_impl_split(concl, node.premises[0].conclusion,
                                 node.premises[1].conclusion)
            if i == 0:
                return ProofTree(name, target, qs)
            prefix = target.antecedent[:i]
            body, key = self._peel(qs[1], prefix, target.succedent)
            sf = apply_symbol_map(SIGMA, concl.antecedent[i])  # a CoImp now
            applied_ant = (sf,) + qs[0].conclusion.antecedent \
                + body.conclusion.antecedent[1:]
            applied = ProofTree("coimpL", Sequent(applied_ant, key),
                                (qs[0], body))
            return self._repair(path, rule, target, prefix, applied)

        if rule == "coimpL":
            k = _find_coimpl_split(concl, node.premises[0].conclusion,
                                   node.premises[1].conclusion)
            if k == 0:
                return ProofTree(name, target, qs)
            prefix = target.antecedent[:k]
            body, key = self._peel(qs[1], prefix, target.succedent)
            i = k + len(node.premises[0].conclusion.antecedent)
            sf = apply_symbol_map(SIGMA, concl.antecedent[i])  # an Imp now
            applied_ant = qs[0].conclusion.antecedent + (sf,) \
                + body.conclusion.antecedent[1:]
            applied = ProofTree("impL", Sequent(applied_ant, key),
                                (qs[0], body))
            return self._repair(path, rule, target, prefix, applied)

        # Everything else (axioms, right rules, negations, zeroW, cut) has
        # the same shape in both systems after the symbol swap.
        return ProofTree(name, target, qs)


def translate_to_fl_prime(p: ProofTree,
                          strategy: str = "tensor") -> TranslationTrace:
    """Translate an fl proof into an flp proof of the sigma-image sequent."""
    report = check_proof(System.FL, p)
    if not report.accepted:
        raise ValueError(
            f"input is not a valid fl proof: {report.reason} at {report.path}")
    tr = _Translator(strategy)
    out = tr.translate(p, ())
    verify = check_proof(System.FLP, out)
    if not verify.accepted:  # pragma: no cover - structural guarantee
        raise RuntimeError(
            f"translation produced an invalid flp proof: {verify.reason} "
            f"at {verify.path}")
    return TranslationTrace(out, tr.cuts, tuple(tr.cases))

"""Concrete syntax for formulas, sequents, and proof scripts.

Formula grammar (ASCII surface; tightest binding first)::

    atom      identifier starting with a letter (not a reserved word)
    constant  1   0   top   bot
    prefix    neg F     coneg F
    infix     F * F     F /\\ F     F \\/ F     F -> F     F <- F

``*``, ``/\\``, ``\\/``, and ``->`` associate to the right, ``<-`` to the
left; ``->`` and ``<-`` share the lowest precedence level and may not be
mixed without parentheses.  Unicode input aliases are accepted:
``⊗ ∧ ∨ → ← ¬ ¬′ ⊤ ⊥ ⊢``.  Printing emits minimal parentheses, so
``parse(print(x)) == x`` and printed text is in normal form.

Sequents are written ``F1, F2 |- G``; either side may be empty.

Proof scripts are line oriented: each line is ``<indent><rule> : <sequent>``
with children indented exactly two spaces deeper, left premise first.  A
machine-readable JSON form with fields ``rule``, ``sequent``, ``premises``
is provided alongside.
"""

from __future__ import annotations

import json

from .calculus import ProofTree
from .formulas import (
    Atom,
    BOT,
    CoImp,
    CoNeg,
    Const,
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
)


class SourceError(Exception):
    """A parse failure with a position and what was expected there."""

    def __init__(self, line: int, col: int, expected: str) -> None:
        super().__init__(f"line {line}, column {col}: expected {expected}")
        self.line = line
        self.col = col
        self.expected = expected


_KEYWORDS = {"neg", "coneg", "top", "bot"}

_SYMBOL_ALIASES = {
    "⊗": "*",    # tensor
    "∧": "/\\",  # and
    "∨": "\\/",  # or
    "→": "->",
    "←": "<-",
    "⊤": "top",
    "⊥": "bot",
    "⊢": "|-",
}


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int) -> None:
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str, line: int = 1) -> list[_Token]:
    tokens: list[_Token] = []
    col = 1
    i = 0
    n = len(text)

    def push(kind: str, lexeme: str) -> None:
        tokens.append(_Token(kind, lexeme, line, col))

    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c in _SYMBOL_ALIASES:
            push(_SYMBOL_ALIASES[c], c)
            i += 1
            col += 1
            continue
        if c == "¬":  # unicode negation, optionally primed
            if i + 1 < n and text[i + 1] in ("′", "'"):
                push("coneg", text[i:i + 2])
                i += 2
                col += 2
            else:
                push("neg", c)
                i += 1
                col += 1
            continue
        two = text[i:i + 2]
        if two in ("->", "<-", "/\\", "\\/", "|-"):
            push(two, two)
            i += 2
            col += 2
            continue
        if c in "*(),":
            push(c, c)
            i += 1
            col += 1
            continue
        if c in "10":
            push(c, c)
            i += 1
            col += 1
            continue
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            push(word if word in _KEYWORDS else "ident", word)
            col += j - i
            i = j
            continue
        raise SourceError(line, col, f"a token (found {c!r})")
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise SourceError(tok.line, tok.col, what)
        return self.next()

    def fail(self, what: str):
        tok = self.peek()
        raise SourceError(tok.line, tok.col, what)

    # precedence levels, loosest first: -> <- | \/ | /\ | * | prefix | atoms

    def formula(self) -> Formula:
        left = self.or_level()
        kind = self.peek().kind
        if kind == "->":
            parts = [left]
            while self.peek().kind == "->":
                self.next()
                parts.append(self.or_level())
            if self.peek().kind == "<-":
                self.fail("no mixing of '->' and '<-' without parentheses")
            result = parts[-1]
            for part in reversed(parts[:-1]):
                result = Imp(part, result)
            return result
        if kind == "<-":
            while self.peek().kind == "<-":
                self.next()
                left = CoImp(left, self.or_level())
            if self.peek().kind == "->":
                self.fail("no mixing of '->' and '<-' without parentheses")
            return left
        return left

    def _right_chain(self, kind: str, ctor, sub) -> Formula:
        parts = [sub()]
        while self.peek().kind == kind:
            self.next()
            parts.append(sub())
        result = parts[-1]
        for part in reversed(parts[:-1]):
            result = ctor(part, result)
        return result

    def or_level(self) -> Formula:
        return self._right_chain("\\/", Plus, self.and_level)

    def and_level(self) -> Formula:
        return self._right_chain("/\\", With, self.tensor_level)

    def tensor_level(self) -> Formula:
        return self._right_chain("*", Tensor, self.unary)

    def unary(self) -> Formula:
        kind = self.peek().kind
        if kind == "neg":
            self.next()
            return Neg(self.unary())
        if kind == "coneg":
            self.next()
            return CoNeg(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "ident":
            self.next()
            return Atom(tok.text)
        if tok.kind == "1":
            self.next()
            return ONE
        if tok.kind == "0":
            self.next()
            return ZERO
        if tok.kind == "top":
            self.next()
            return TOP
        if tok.kind == "bot":
            self.next()
            return BOT
        if tok.kind == "(":
            self.next()
            inner = self.formula()
            self.expect(")", "')'")
            return inner
        self.fail("a formula")

    def sequent(self) -> Sequent:
        antecedent: list[Formula] = []
        if self.peek().kind != "|-":
            antecedent.append(self.formula())
            while self.peek().kind == ",":
                self.next()
                antecedent.append(self.formula())
        self.expect("|-", "'|-'")
        succedent = None
        if self.peek().kind != "eof":
            succedent = self.formula()
        return Sequent(tuple(antecedent), succedent)


def parse_formula(text: str, line: int = 1) -> Formula:
    parser = _Parser(_tokenize(text, line))
    f = parser.formula()
    if parser.peek().kind != "eof":
        parser.fail("end of input")
    return f


def parse_sequent(text: str, line: int = 1) -> Sequent:
    parser = _Parser(_tokenize(text, line))
    s = parser.sequent()
    if parser.peek().kind != "eof":
        parser.fail("end of input")
    return s


# -- printing ----------------------------------------------------------------

_ASCII_SYMBOLS = {
    "one": "1", "zero": "0", "top": "top", "bot": "bot",
    Neg: "neg ", CoNeg: "coneg ",
    Tensor: " * ", With: " /\\ ", Plus: " \\/ ", Imp: " -> ", CoImp: " <- ",
}

_LATEX_SYMBOLS = {
    "one": "\\mathbf{1}", "zero": "\\mathbf{0}", "top": "\\top",
    "bot": "\\bot",
    Neg: "\\neg ", CoNeg: "\\neg' ",
    Tensor: " \\otimes ", With: " \\wedge ", Plus: " \\vee ",
    Imp: " \\to ", CoImp: " \\leftarrow ",
}

_LEVEL = {Imp: 0, CoImp: 0, Plus: 1, With: 2, Tensor: 3, Neg: 4, CoNeg: 4}


def _render(f: Formula, ctx_level: int, symbols: dict) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Const):
        return symbols[f.kind]
    if isinstance(f, (Neg, CoNeg)):
        text = symbols[type(f)] + _render(f.body, 4, symbols)
        return f"({text})" if ctx_level > 4 else text
    level = _LEVEL[type(f)]
    if isinstance(f, Imp):
        # right-assocative; a bare right child may be another Imp only
        right_lvl = 0 if isinstance(f.right, Imp) else 1
        text = _render(f.left, 1, symbols) + symbols[Imp] \
            + _render(f.right, right_lvl, symbols)
    elif isinstance(f, CoImp):
        left_lvl = 0 if isinstance(f.left, CoImp) else 1
        text = _render(f.left, left_lvl, symbols) + symbols[CoImp] \
            + _render(f.right, 1, symbols)
    else:
        right_lvl = level if isinstance(f.right, type(f)) else level + 1
        text = _render(f.left, level + 1, symbols) + symbols[type(f)] \
            + _render(f.right, right_lvl, symbols)
    return f"({text})" if ctx_level > level else text


def print_formula(f: Formula) -> str:
    return _render(f, 0, _ASCII_SYMBOLS)


def print_sequent(s: Sequent) -> str:
    left = ", ".join(print_formula(f) for f in s.antecedent)
    text = left + " |-" if left else "|-"
    if s.succedent is not None:
        text += " " + print_formula(s.succedent)
    return text


# -- proof scripts -------------------------------------------------------------


def parse_proof(text: str) -> ProofTree:
    """Parse the indented line format; children sit exactly two spaces
    deeper than their parent, in premise order."""
    entries: list[tuple[int, str, Sequent, list]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        stripped = raw.lstrip(" ")
        indent = len(raw) - len(stripped)
        if "\t" in raw[:indent + 1]:
            raise SourceError(lineno, 1, "space indentation, not tabs")
        if indent % 2 != 0:
            raise SourceError(lineno, indent + 1, "an even indent")
        if ":" not in stripped:
            raise SourceError(lineno, indent + 1, "'<rule> : <sequent>'")
        rule, _, seq_text = stripped.partition(":")
        rule = rule.strip()
        if not rule:
            raise SourceError(lineno, indent + 1, "a rule name")
        seq = parse_sequent(seq_text.strip(), line=lineno)
        entries.append((indent // 2, rule, seq, []))
        depth = indent // 2
        if len(entries) == 1:
            if depth != 0:
                raise SourceError(lineno, 1, "the root line to be unindented")
        else:
            prev_depth = entries[-2][0]
            if depth > prev_depth + 1:
                raise SourceError(lineno, indent + 1,
                                  "indentation at most two spaces deeper")
    if not entries:
        raise SourceError(1, 1, "a proof line")

    stack: list[tuple[int, str, Sequent, list]] = []
    root = entries[0]
    stack.append(root)
    for entry in entries[1:]:
        depth = entry[0]
        while stack and stack[-1][0] >= depth:
            stack.pop()
        if not stack:
            raise SourceError(1, 1, "a single proof root")
        stack[-1][3].append(entry)
        stack.append(entry)

    def build(entry) -> ProofTree:
        _, rule, seq, children = entry
        return ProofTree(rule, seq, tuple(build(c) for c in children))

    return build(root)


def print_proof(tree: ProofTree) -> str:
    lines: list[str] = []

    def walk(node: ProofTree, depth: int) -> None:
        lines.append("  " * depth + node.rule + " : "
                     + print_sequent(node.conclusion))
        for child in node.premises:
            walk(child, depth + 1)

    walk(tree, 0)
    return "\n".join(lines) + "\n"


def proof_to_json(tree: ProofTree) -> str:
    def as_dict(node: ProofTree) -> dict:
        return {
            "rule": node.rule,
            "sequent": print_sequent(node.conclusion),
            "premises": [as_dict(c) for c in node.premises],
        }

    return json.dumps(as_dict(tree), indent=2) + "\n"


def proof_from_json(text: str) -> ProofTree:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SourceError(exc.lineno, exc.colno, "valid JSON") from None

    def build(node) -> ProofTree:
        if not isinstance(node, dict):
            raise SourceError(1, 1, "a proof object")
        try:
            rule = node["rule"]
            seq_text = node["sequent"]
            premises = node["premises"]
        except KeyError as exc:
            raise SourceError(1, 1, f"field {exc.args[0]!r}") from None
        if not isinstance(rule, str) or not isinstance(premises, list):
            raise SourceError(1, 1, "'rule' string and 'premises' list")
        return ProofTree(rule, parse_sequent(seq_text),
                         tuple(build(c) for c in premises))

    return build(obj)


# -- LaTeX ---------------------------------------------------------------------

_LATEX_RULES = {
    "id": "\\mathrm{id}", "oneR": "\\mathbf{1}R", "zeroL": "\\mathbf{0}L",
    "topR": "\\top R", "botL": "\\bot L",
    "oneW": "\\mathbf{1}W", "zeroW": "\\mathbf{0}W", "cut": "\\mathrm{cut}",
    "impL": "\\to L", "impR": "\\to R",
    "coimpL": "\\leftarrow L", "coimpR": "\\leftarrow R",
    "negL": "\\neg L", "negR": "\\neg R",
    "conegL": "\\neg' L", "conegR": "\\neg' R",
    "tensL": "\\otimes L", "tensR": "\\otimes R",
    "andL1": "\\wedge L_1", "andL2": "\\wedge L_2", "andR": "\\wedge R",
    "orL": "\\vee L", "orR1": "\\vee R_1", "orR2": "\\vee R_2",
}


def latex_formula(f: Formula) -> str:
    return _render(f, 0, _LATEX_SYMBOLS)


def latex_sequent(s: Sequent) -> str:
    left = ", ".join(latex_formula(f) for f in s.antecedent)
    text = left + " \\vdash" if left else "\\vdash"
    if s.succedent is not None:
        text += " " + latex_formula(s.succedent)
    return text


def emit_latex(tree: ProofTree) -> str:
    """Nested ``\\infer`` figure; zero-premise nodes render as bare sequents."""

    def walk(node: ProofTree, depth: int) -> str:
        pad = "  " * depth
        if not node.premises:
            return pad + latex_sequent(node.conclusion)
        label = _LATEX_RULES.get(node.rule, "\\mathrm{" + node.rule + "}")
        parts = [walk(c, depth + 1) for c in node.premises]
        body = ("\n" + pad + "  &\n").join(parts)
        return (pad + "\\infer[" + label + "]{"
                + latex_sequent(node.conclusion) + "}{\n"
                + body + "\n" + pad + "}")

    return walk(tree, 0) + "\n"

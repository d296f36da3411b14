"""Linear integer arithmetic front end.

Formulas are trees of linear atoms (canonicalized to <=) under not/and/or,
optionally below a prefix of bounded quantifier blocks.  Quantifier-free
formulas over a box are *disjointified*: rewritten as a disjoint list of
polyhedra whose integer points partition the truth set, by a decision tree
over the atoms with exact integer-point pruning.  Summing the polytope GFs of
the cells yields the short GF of the truth set.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .barvinok import Polyhedron, polytope_gf
from .errors import FormatError
from .gfcore import LatticeBox, ShortGF, canonicalize, concat, zero_gf

# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class LinearAtom:
    """coeffs . x <= rhs with integer data; strict forms are pre-tightened."""

    coeffs: tuple  # ((name, coefficient), ...) sorted by name
    rhs: int

    @classmethod
    def from_dict(cls, coeff_map, rhs):
        items = tuple(sorted((n, c) for n, c in coeff_map.items() if c != 0))
        return cls(items, int(rhs))

    def names(self):
        return [n for n, _ in self.coeffs]

    def vector(self, var_order):
        idx = {n: i for i, n in enumerate(var_order)}
        row = [0] * len(var_order)
        for n, c in self.coeffs:
            row[idx[n]] = c
        return tuple(row), self.rhs

    def negated_vector(self, var_order):
        row, rhs = self.vector(var_order)
        return tuple(-c for c in row), -rhs - 1

    def evaluate(self, assign):
        return sum(c * assign[n] for n, c in self.coeffs) <= self.rhs


@dataclass(frozen=True)
class Not:
    child: object


@dataclass(frozen=True)
class And:
    children: tuple


@dataclass(frozen=True)
class Or:
    children: tuple


@dataclass(frozen=True)
class QuantBlock:
    """One quantifier over a group of variables, all ranging over [0, size)."""

    kind: str  # 'E' or 'A'
    names: tuple
    size: int

    def __post_init__(self):
        if self.kind not in ("E", "A"):
            raise ValueError("quantifier kind must be 'E' or 'A'")
        if self.size < 0:
            raise ValueError("quantifier range size must be nonnegative")


@dataclass(frozen=True)
class PAFormula:
    """Quantifier prefix plus a quantifier-free body."""

    blocks: tuple
    body: object
    free_vars: tuple


def negate(node):
    return node.child if isinstance(node, Not) else Not(node)


def conj(children):
    items = tuple(children)
    return items[0] if len(items) == 1 else And(items)


def disj(children):
    items = tuple(children)
    return items[0] if len(items) == 1 else Or(items)


def collect_atoms(node, acc=None, seen=None):
    """Atoms in syntactic order, deduplicated by value."""
    if acc is None:
        acc, seen = [], set()
    if isinstance(node, LinearAtom):
        if node not in seen:
            seen.add(node)
            acc.append(node)
    elif isinstance(node, Not):
        collect_atoms(node.child, acc, seen)
    elif isinstance(node, (And, Or)):
        for c in node.children:
            collect_atoms(c, acc, seen)
    else:
        raise TypeError(f"not a quantifier-free node: {node!r}")
    return acc


def free_variables(node, bound=frozenset()):
    if isinstance(node, LinearAtom):
        return [n for n in node.names() if n not in bound]
    if isinstance(node, Not):
        return free_variables(node.child, bound)
    if isinstance(node, (And, Or)):
        out = []
        for c in node.children:
            for n in free_variables(c, bound):
                if n not in out:
                    out.append(n)
        return out
    raise TypeError(f"unexpected node: {node!r}")


def formula_length(formula):
    """Total bit length of all constants plus one unit per symbol."""
    node = formula.body if isinstance(formula, PAFormula) else formula
    total = 0
    if isinstance(formula, PAFormula):
        for b in formula.blocks:
            total += 1 + len(b.names) + max(1, (b.size - 1).bit_length())

    def rec(nd):
        nonlocal total
        total += 1
        if isinstance(nd, LinearAtom):
            for _, c in nd.coeffs:
                total += max(1, abs(c).bit_length())
            total += max(1, abs(nd.rhs).bit_length())
        elif isinstance(nd, Not):
            rec(nd.child)
        else:
            for c in nd.children:
                rec(c)

    rec(node)
    return total


# ---------------------------------------------------------------------------
# evaluation


def _eval_node(node, assign):
    if isinstance(node, LinearAtom):
        return node.evaluate(assign)
    if isinstance(node, Not):
        return not _eval_node(node.child, assign)
    if isinstance(node, And):
        return all(_eval_node(c, assign) for c in node.children)
    if isinstance(node, Or):
        return any(_eval_node(c, assign) for c in node.children)
    raise TypeError(f"unexpected node: {node!r}")


def eval_formula(formula, assignment):
    """Reference semantics: direct recursive evaluation over finite ranges."""
    if not isinstance(formula, PAFormula):
        formula = PAFormula((), formula, tuple(free_variables(formula)))
    if isinstance(assignment, (tuple, list)):
        assignment = dict(zip(formula.free_vars, assignment))
    assign = dict(assignment)

    def rec(blocks):
        if not blocks:
            return _eval_node(formula.body, assign)
        block = blocks[0]

        def walk(names):
            if not names:
                return rec(blocks[1:])
            name = names[0]
            hits = []
            for v in range(block.size):
                assign[name] = v
                hits.append(walk(names[1:]))
                if block.kind == "E" and hits[-1]:
                    del assign[name]
                    return True
                if block.kind == "A" and not hits[-1]:
                    del assign[name]
                    return False
            if name in assign:
                del assign[name]
            return block.kind == "A"

        return walk(list(block.names))

    return rec(list(formula.blocks))


def _eval3(node, lookup):
    """Three-valued evaluation; returns (value-or-None, first undecided atom)."""
    if isinstance(node, LinearAtom):
        val = lookup.get(node)
        return (val, None if val is not None else node)
    if isinstance(node, Not):
        val, atom = _eval3(node.child, lookup)
        return (None if val is None else not val, atom)
    if isinstance(node, And):
        first = None
        decided = True
        for c in node.children:
            val, atom = _eval3(c, lookup)
            if val is False:
                return False, None
            if val is None:
                decided = False
                if first is None:
                    first = atom
        return (True, None) if decided else (None, first)
    if isinstance(node, Or):
        first = None
        decided = True
        for c in node.children:
            val, atom = _eval3(c, lookup)
            if val is True:
                return True, None
            if val is None:
                decided = False
                if first is None:
                    first = atom
        return (False, None) if decided else (None, first)
    raise TypeError(f"unexpected node: {node!r}")


# ---------------------------------------------------------------------------
# disjointification


def disjointify(body, box, var_order=None):
    """Disjoint polyhedra whose integer points partition the truth set in the box.

    Decision tree over the atoms: the true branch adds the atom row, the false
    branch its tightened negation; branches without an integer point are
    pruned exactly.
    """
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    if var_order is None:
        var_order = tuple(free_variables(body))
    n = len(var_order)
    if box.nvars != n:
        raise ValueError("box arity does not match the variable count")
    box_rows = []
    for j in range(n):
        row = [0] * n
        row[j] = 1
        box_rows.append((tuple(row), box.sides[j] - 1))
        row2 = [0] * n
        row2[j] = -1
        box_rows.append((tuple(row2), 0))
    bounds = box.bounds()

    cells = []
    stack = [({}, [], None)]
    while stack:
        lookup, rows, witness = stack.pop()
        val, atom = _eval3(body, lookup)
        if val is False:
            continue
        if val is True:
            cells.append(rows)
            continue
        for branch in (False, True):
            row = (
                atom.vector(var_order)
                if branch
                else atom.negated_vector(var_order)
            )
            new_rows = rows + [row]
            wit = witness
            if wit is None or la.dot(row[0], wit) > row[1]:
                found = la.lattice_points(
                    box_rows + new_rows, bounds, first_only=True
                )
                if not found:
                    continue
                wit = found[0]
            new_lookup = dict(lookup)
            new_lookup[atom] = branch
            stack.append((new_lookup, new_rows, wit))

    out = []
    for rows in cells:
        all_rows = box_rows + rows
        A = tuple(tuple(Fraction(c) for c in coeffs) for coeffs, _ in all_rows)
        b = tuple(Fraction(rhs) for _, rhs in all_rows)
        out.append(Polyhedron(A, b, n))
    return out


def qf_to_gf(body, box, var_order=None, merge=True):
    """Short GF of the truth set of a quantifier-free formula on a box."""
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    if var_order is None:
        var_order = tuple(free_variables(body))
    cells = disjointify(body, box, var_order)
    terms = []
    for cell in cells:
        terms.extend(polytope_gf(cell, check_bounded=False, merge=merge).terms)
    return canonicalize(ShortGF(len(var_order), tuple(terms)))


# ---------------------------------------------------------------------------
# parser


class _Tokens:
    def __init__(self, text):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j]))
                i = j
            elif text[i : i + 2] in ("<=", ">="):
                self.toks.append(("op", text[i : i + 2]))
                i += 2
            elif ch in "()[],:&|!*+-<>=":
                self.toks.append(("op", ch))
                i += 1
            else:
                raise FormatError(f"unexpected character {ch!r} at {i}")
        self.pos = 0

    def peek(self, ahead=0):
        if self.pos + ahead < len(self.toks):
            return self.toks[self.pos + ahead]
        return (None, None)

    def next(self):
        tok = self.peek()
        if tok[0] is None:
            raise FormatError("unexpected end of formula")
        self.pos += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise FormatError(
                f"expected {value or kind} at token {self.pos - 1}, got {tok[1]!r}"
            )
        return tok


def parse_pa(text):
    """Parse a formula in the quantifier-prefix grammar.

    form := quant* disj; quant := ('E'|'A') var '[' int ',' int ')' ':';
    disj := conj ('|' conj)*; conj := lit ('&' lit)*;
    lit := '!'? atom | '!'? '(' form ')';
    atom := linexpr ('<='|'>='|'<'|'>'|'=') linexpr.
    Nested quantified subformulas are rejected (all uses are prenex).
    """
    toks = _Tokens(text)
    formula = _parse_form(toks)
    if toks.peek()[0] is not None:
        raise FormatError(f"trailing input at token {toks.pos}")
    return formula


def _parse_form(toks):
    blocks = []
    while (
        toks.peek()[0] == "name"
        and toks.peek()[1] in ("E", "A")
        and toks.peek(1)[0] == "name"
        and toks.peek(2) == ("op", "[")
    ):
        kind = toks.next()[1]
        var = toks.next()[1]
        toks.expect("op", "[")
        lo = toks.expect("int")[1]
        toks.expect("op", ",")
        hi = toks.expect("int")[1]
        toks.expect("op", ")")
        toks.expect("op", ":")
        if lo != 0:
            raise FormatError("quantifier ranges must start at 0")
        blocks.append(QuantBlock(kind, (var,), hi))
    body = _parse_disj(toks)
    bound = {n for b in blocks for n in b.names}
    free = tuple(n for n in free_variables(body) if n not in bound)
    if blocks:
        return PAFormula(tuple(blocks), body, free)
    return PAFormula((), body, free)


def _parse_disj(toks):
    items = [_parse_conj(toks)]
    while toks.peek() == ("op", "|"):
        toks.next()
        items.append(_parse_conj(toks))
    return disj(items)


def _parse_conj(toks):
    items = [_parse_lit(toks)]
    while toks.peek() == ("op", "&"):
        toks.next()
        items.append(_parse_lit(toks))
    return conj(items)


def _parse_lit(toks):
    if toks.peek() == ("op", "!"):
        toks.next()
        return negate(_parse_lit(toks))
    if toks.peek() == ("op", "("):
        toks.next()
        inner = _parse_form(toks)
        toks.expect("op", ")")
        if inner.blocks:
            raise FormatError("nested quantifiers are unsupported; use a prenex form")
        return inner.body
    return _parse_atom(toks)


def _parse_linexpr(toks):
    coeffs = {}
    const = 0
    sign = 1
    expect_term = True
    while True:
        kind, val = toks.peek()
        if kind == "op" and val in ("+", "-") and not expect_term:
            sign = 1 if val == "+" else -1
            toks.next()
            expect_term = True
            continue
        if not expect_term:
            break
        if kind == "op" and val == "-":
            toks.next()
            sign = -sign
            continue
        if kind == "int":
            toks.next()
            num = sign * val
            if toks.peek() == ("op", "*"):
                toks.next()
                name = toks.expect("name")[1]
                coeffs[name] = coeffs.get(name, 0) + num
            else:
                const += num
            sign = 1
            expect_term = False
        elif kind == "name":
            toks.next()
            coeffs[val] = coeffs.get(val, 0) + sign
            sign = 1
            expect_term = False
        else:
            raise FormatError(f"expected a term, got {val!r}")
    return coeffs, const


def _parse_atom(toks):
    lc, lconst = _parse_linexpr(toks)
    kind, op = toks.next()
    if kind != "op" or op not in ("<=", ">=", "<", ">", "="):
        raise FormatError(f"expected a relation, got {op!r}")
    rc, rconst = _parse_linexpr(toks)
    diff = dict(lc)
    for n, c in rc.items():
        diff[n] = diff.get(n, 0) - c
    bound = rconst - lconst  # diff . x REL bound
    if op == "<=":
        return LinearAtom.from_dict(diff, bound)
    if op == "<":
        return LinearAtom.from_dict(diff, bound - 1)
    if op == ">=":
        return LinearAtom.from_dict({n: -c for n, c in diff.items()}, -bound)
    if op == ">":
        return LinearAtom.from_dict({n: -c for n, c in diff.items()}, -bound - 1)
    return And(
        (
            LinearAtom.from_dict(diff, bound),
            LinearAtom.from_dict({n: -c for n, c in diff.items()}, -bound),
        )
    )

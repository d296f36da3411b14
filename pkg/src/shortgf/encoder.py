"""Boolean circuits to short GFs.

A circuit over r input bits is Tseitin-encoded as a 3-CNF over input bits and
gate bits, each clause's violation region is expressed with bit-extraction
systems over bounded integer variables, and the resulting quantifier-free
formula region inside a box becomes a short GF.  The accepted inputs are then
recovered as a specialization of the box complement of a projection, with the
projection realized by an exact brute-force oracle (a stand-in for the
polynomial-time polytope-projection algorithm, which is out of scope here).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .barvinok import enumerate_polytope_points, polytope_gf
from .calculus import (
    TauMap,
    choose_tau,
    compress,
    evaluate_at_one,
    hadamard,
    minkowski_oracle,
    support_points,
)
from .errors import FormatError, SpecializationError
from .gfcore import (
    GFTerm,
    LatticeBox,
    ShortGF,
    canonicalize,
    concat,
    from_point_set,
    zero_gf,
)
from .presburger import (
    And,
    LinearAtom,
    Not,
    Or,
    PAFormula,
    QuantBlock,
    disjointify,
    eval_formula,
    formula_length,
    parse_pa,
)

# ---------------------------------------------------------------------------
# circuits


@dataclass(frozen=True)
class BooleanCircuit:
    """Fan-in <= 2 gate list over r input bits; bit 1 is least significant."""

    r: int
    gates: tuple  # ((op, ref1, ref2-or-None), ...) with ref = ('x'|'g', index)
    output: tuple  # ref

    @property
    def p(self):
        return len(self.gates)

    def _ref_value(self, ref, x, values):
        kind, idx = ref
        if kind == "x":
            return (x >> (idx - 1)) & 1
        return values[idx]

    def gate_values(self, x):
        """Evaluate on input integer x; returns (accepted, gate-bit integer)."""
        values = {}
        for j, (op, a, b) in enumerate(self.gates, start=1):
            va = self._ref_value(a, x, values)
            if op == "NOT":
                values[j] = 1 - va
            elif op == "AND":
                values[j] = va & self._ref_value(b, x, values)
            elif op == "OR":
                values[j] = va | self._ref_value(b, x, values)
            else:
                raise ValueError(f"unknown gate op {op!r}")
        out = self._ref_value(self.output, x, values)
        y = sum(values[j] << (j - 1) for j in values)
        return bool(out), y

    def accepts(self, x):
        return self.gate_values(x)[0]

    def truth_table(self):
        return sorted(x for x in range(1 << self.r) if self.accepts(x))


def parse_circuit(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("circuit "):
        raise FormatError("missing 'circuit' header")
    try:
        r = int(dict(p.split("=", 1) for p in lines[0].split()[1:])["r"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad circuit header: {lines[0]!r}") from exc

    def ref(tok, ngates):
        if tok.startswith("x"):
            i = int(tok[1:])
            if not 1 <= i <= r:
                raise FormatError(f"input {tok} out of range")
            return ("x", i)
        if tok.startswith("g"):
            i = int(tok[1:])
            if not 1 <= i <= ngates:
                raise FormatError(f"gate {tok} referenced before definition")
            return ("g", i)
        raise FormatError(f"bad reference {tok!r}")

    gates = []
    output = None
    for ln in lines[1:]:
        toks = ln.split()
        if toks[0] == "out":
            if len(toks) != 2:
                raise FormatError(f"bad output line: {ln!r}")
            output = ref(toks[1], len(gates))
            continue
        if len(toks) < 4 or toks[1] != "=":
            raise FormatError(f"bad gate line: {ln!r}")
        name, op = toks[0], toks[2]
        if name != f"g{len(gates) + 1}":
            raise FormatError(f"gates must be named in order; got {name!r}")
        if op == "NOT":
            if len(toks) != 4:
                raise FormatError(f"NOT takes one argument: {ln!r}")
            gates.append(("NOT", ref(toks[3], len(gates)), None))
        elif op in ("AND", "OR"):
            if len(toks) != 5:
                raise FormatError(f"{op} takes two arguments: {ln!r}")
            gates.append((op, ref(toks[3], len(gates)), ref(toks[4], len(gates))))
        else:
            raise FormatError(f"unknown op {op!r}")
    if output is None:
        raise FormatError("missing 'out' line")
    return BooleanCircuit(r, tuple(gates), output)


def format_circuit(c):
    lines = [f"circuit r={c.r}"]
    for j, (op, a, b) in enumerate(c.gates, start=1):
        def fmt(ref):
            return f"{ref[0]}{ref[1]}"
        if op == "NOT":
            lines.append(f"g{j} = NOT {fmt(a)}")
        else:
            lines.append(f"g{j} = {op} {fmt(a)} {fmt(b)}")
    lines.append(f"out {c.output[0]}{c.output[1]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Tseitin 3-CNF


@dataclass(frozen=True)
class CNF3:
    """Width-3 clauses over input variables 1..r and gate variables r+1..r+p."""

    r: int
    p: int
    clauses: tuple

    def satisfied(self, x, y):
        return all(
            any(_literal_value(lit, x, y, self.r) for lit in clause)
            for clause in self.clauses
        )


def _literal_value(lit, x, y, r):
    v = abs(lit)
    word = x if v <= r else y
    i = v if v <= r else v - r
    bit = (word >> (i - 1)) & 1
    return bit == 1 if lit > 0 else bit == 0


def circuit_to_3cnf(circuit):
    """Gate-consistency clauses plus the output unit clause, padded to width 3.

    Both directions of each gate's defining equivalence are included, so the
    gate bits are a function of the input bits on every satisfying assignment.
    """
    r = circuit.r

    def lit(ref, positive=True):
        kind, idx = ref
        v = idx if kind == "x" else r + idx
        return v if positive else -v

    clauses = []

    def add(*lits):
        lits = list(lits)
        while len(lits) < 3:
            lits.append(lits[-1])
        clauses.append(tuple(lits[:3]))

    for j, (op, a, b) in enumerate(circuit.gates, start=1):
        g = ("g", j)
        if op == "NOT":
            add(lit(g), lit(a))
            add(-lit(g), -lit(a))
        elif op == "AND":
            add(-lit(g), lit(a))
            add(-lit(g), lit(b))
            add(lit(g), -lit(a), -lit(b))
        elif op == "OR":
            add(lit(g), -lit(a))
            add(lit(g), -lit(b))
            add(-lit(g), lit(a), lit(b))
    add(lit(circuit.output))
    return CNF3(r, circuit.p, tuple(clauses))


# ---------------------------------------------------------------------------
# bit-extraction systems


def bit_atoms(i, positive, var, zvar):
    """Conjunction (pair) of atoms tying zvar to bit i of var.

    positive: the bit is 1, i.e. floor(var / 2^(i-1)) is odd; the witness is
    z = floor(var / 2^i).  Strict inequalities are pre-tightened to integer
    forms by scaling through 2^(i-1) and shifting the right side by one.
    """
    w = 1 << i  # 2^i
    h = 1 << (i - 1)  # 2^(i-1)
    if positive:
        first = LinearAtom.from_dict({var: 1, zvar: -w}, w - 1)
        second = LinearAtom.from_dict({zvar: w, var: -1}, -h)
    else:
        first = LinearAtom.from_dict({var: 1, zvar: -w}, h - 1)
        second = LinearAtom.from_dict({zvar: w, var: -1}, 0)
    return (first, second)


def _negated_literal_atoms(lit, r, zvar):
    """Atoms asserting the literal is FALSE, witnessed through zvar."""
    v = abs(lit)
    var = "x" if v <= r else "y"
    i = v if v <= r else v - r
    # literal positive & false => bit is 0; literal negative & false => bit is 1
    return bit_atoms(i, positive=(lit < 0), var=var, zvar=zvar)


def _negate_atom(atom):
    return LinearAtom(tuple((n, -c) for n, c in atom.coeffs), -atom.rhs - 1)


def cnf_to_pa(cnf):
    """Quantified formula: exists y, for all z-triples, the big conjunction.

    Per clause, the violation region (all three literals false) is a
    conjunction of six inequalities over (x, y, z1, z2, z3); its negation is a
    six-way disjunction, and the conjunction over clauses characterizes
    satisfaction.  Returns (formula, violation_body, q).
    """
    r, p = cnf.r, cnf.p
    q = max(r, p, 1)
    violations = []
    for clause in cnf.clauses:
        atoms = []
        for slot, lit in enumerate(clause, start=1):
            atoms.extend(_negated_literal_atoms(lit, r, f"z{slot}"))
        violations.append(And(tuple(atoms)))
    satisfied = And(
        tuple(Or(tuple(_negate_atom(a) for a in v.children)) for v in violations)
    )
    blocks = (
        QuantBlock("E", ("y",), 1 << p),
        QuantBlock("A", ("z1", "z2", "z3"), 1 << q),
    )
    formula = PAFormula(blocks, satisfied, ("x",))
    violation_body = Or(tuple(violations)) if violations else None
    return formula, violation_body, q


# ---------------------------------------------------------------------------
# segment encodings


@dataclass
class SegmentEncoding:
    """Box, GF of the clause-violation region, and its per-cell projections."""

    r: int
    p: int
    q: int
    box: LatticeBox  # the (x, y) box
    full_box: LatticeBox  # the (x, y, z...) box
    fr: ShortGF
    pieces: tuple  # per-cell (x, y)-projection GFs
    piece_points: tuple  # per-cell projected point sets
    circuit: BooleanCircuit
    cnf: CNF3
    zdims: int = 3
    tau: TauMap = None
    cell_count: int = 0
    cell_points: tuple = ()  # per-cell full lattice point lists

    def proj_points(self):
        out = set()
        for pts in self.piece_points:
            out |= pts
        return out


def encode_segment(circuit):
    """Encode one circuit's accepted set as a boxed GF plus projections.

    The violation region of the Tseitin formula is disjointified inside the
    (x, y, z)-box; its cells are turned into short GFs (their sum is the
    region GF) and projected onto (x, y) by exact enumeration.
    """
    cnf = circuit_to_3cnf(circuit)
    formula, violation, q = cnf_to_pa(cnf)
    r, p = cnf.r, cnf.p
    var_order = ("x", "y", "z1", "z2", "z3")
    full_box = LatticeBox((1 << r, 1 << p, 1 << q, 1 << q, 1 << q))
    box = LatticeBox((1 << r, 1 << p))
    if violation is None:
        cells = []
    else:
        cells = disjointify(violation, full_box, var_order)
    fr_terms = []
    pieces = []
    piece_points = []
    cell_points = []
    for cell in cells:
        fr_terms.extend(polytope_gf(cell, check_bounded=False).terms)
        pts = enumerate_polytope_points(cell)
        cell_points.append(tuple(pts))
        proj = sorted({(pt[0], pt[1]) for pt in pts})
        pieces.append(from_point_set(proj, 2))
        piece_points.append(set(proj))
    fr = canonicalize(ShortGF(5, tuple(fr_terms)))
    return SegmentEncoding(
        r, p, q, box, full_box, fr, tuple(pieces), tuple(piece_points),
        circuit, cnf, zdims=3, cell_count=len(cells),
        cell_points=tuple(cell_points),
    )


def violation_projection_by_bits(cnf, box):
    """Independent semantic oracle for the (x, y)-projection of the violation
    region: a pair is in it exactly when some clause has all three literals
    false, since each bit-extraction witness exists within the z-range."""
    out = set()
    for x in range(box.sides[0]):
        for y in range(box.sides[1]):
            for clause in cnf.clauses:
                if all(not _literal_value(lit, x, y, cnf.r) for lit in clause):
                    out.add((x, y))
                    break
    return out


def segment_gf(encoding, check_union=True):
    """Accepted-input GF: specialize the box complement of the projection.

    Verifies the piece-union identity against the bit-semantics oracle and
    the one-witness property of the complement before specializing to x.
    """
    proj = encoding.proj_points()
    if check_union:
        expected = violation_projection_by_bits(encoding.cnf, encoding.box)
        if proj != expected:
            raise ValueError(
                "piece union does not match the projection of the violation region"
            )
    witness = {}
    for x in range(encoding.box.sides[0]):
        for y in range(encoding.box.sides[1]):
            if (x, y) in proj:
                continue
            if x in witness:
                raise SpecializationError((x,), (witness[x],), (y,))
            witness[x] = y
    accepted = sorted(witness)
    return from_point_set([(x,) for x in accepted], 1)


def compress_encoding(encoding):
    """Pack the three z-variables into one coordinate, leaving x and y alone."""
    if encoding.zdims != 3:
        raise ValueError("encoding does not have a 3-variable z-block")
    tau = choose_tau(
        encoding.fr, (1, 1, 3), box=encoding.full_box
    )
    fr2 = compress(encoding.fr, tau)
    n3 = tau.N ** 3
    full_box = LatticeBox(
        (encoding.box.sides[0], encoding.box.sides[1], n3)
    )
    return SegmentEncoding(
        encoding.r, encoding.p, encoding.q, encoding.box, full_box, fr2,
        encoding.pieces, encoding.piece_points, encoding.circuit,
        encoding.cnf, zdims=1, tau=tau, cell_count=encoding.cell_count,
        cell_points=encoding.cell_points,
    )


# ---------------------------------------------------------------------------
# alternating quantifier pipelines


@dataclass
class AlternatingPipeline:
    """Region GF plus the data needed to run projection/anti-projection chains."""

    formula: PAFormula
    var_order: tuple
    box_sides: tuple
    region_points: set
    region_gf: ShortGF
    accepted: tuple
    stages: tuple


def alternating_pipeline(formula, box_sides, limit=2_000_000):
    """Evaluate a prenex formula by eliminating quantifier blocks inner-first.

    The quantifier-free body's truth region in the full box is built as a GF
    (through disjoint cells); existential blocks project the region's point
    set, universal blocks keep the prefixes covered by every block value.
    Stage snapshots are recorded for verification.
    """
    var_order = tuple(formula.free_vars) + tuple(
        n for b in formula.blocks for n in b.names
    )
    if len(box_sides) != len(var_order):
        raise ValueError("box arity does not match free + quantified variables")
    box = LatticeBox(tuple(box_sides))
    if box.volume() > limit:
        from .errors import ResourceLimitError

        raise ResourceLimitError("alternating pipeline box exceeds the point limit")
    cells = disjointify(formula.body, box, var_order)
    region = set()
    terms = []
    for cell in cells:
        region |= set(enumerate_polytope_points(cell))
        terms.extend(polytope_gf(cell, check_bounded=False).terms)
    region_gf = canonicalize(ShortGF(len(var_order), tuple(terms)))

    current = region
    width = len(var_order)
    stages = []
    for block in reversed(formula.blocks):
        group = len(block.names)
        new_width = width - group
        if block.kind == "E":
            current = {pt[:new_width] for pt in current}
        else:
            volume = 1
            for j in range(new_width, width):
                volume *= box.sides[j]
            counts = {}
            for pt in current:
                key = pt[:new_width]
                counts[key] = counts.get(key, 0) + 1
            current = {key for key, cnt in counts.items() if cnt == volume}
        width = new_width
        stages.append((block.kind, frozenset(current)))
    accepted = tuple(sorted(current))
    return AlternatingPipeline(
        formula, var_order, tuple(box_sides), region, region_gf, accepted,
        tuple(stages),
    )


def encode_alternating(circuit, prefix, cert_bits=0):
    """Pipeline for a circuit with one certificate block (or none).

    prefix 'E': accepted = {x : exists certificate c with C(x, c) = 1};
    prefix 'A': the complement shape, evaluated as the box complement of the
    'E' pipeline on the negated circuit; empty prefix: no certificate block.
    Certificate and gate bits share the single bounded witness variable.
    """
    if prefix not in ("", "E", "A"):
        raise ValueError("supported prefixes: '', 'E', 'A' (one block)")
    if prefix == "":
        encoding = encode_segment(circuit)
        seg = segment_gf(encoding)
        accepted = tuple(
            pt[0] for pt in sorted(support_points(seg, (1 << circuit.r,)))
        )
        return encoding, accepted
    work = circuit
    if prefix == "A":
        work = BooleanCircuit(
            circuit.r,
            circuit.gates + (("NOT", circuit.output, None),),
            ("g", circuit.p + 1),
        )
    r = work.r - cert_bits  # low bits: instance; high bits: certificate
    if r < 1:
        raise ValueError("certificate block leaves no instance bits")
    cnf = circuit_to_3cnf(work)
    # renumber: inputs 1..r stay x; inputs r+1..r+cert and gates become y-bits
    shift = {}
    for v in range(1, work.r + 1):
        shift[v] = v if v <= r else -(v - r)  # negative marker: y-bit index
    for j in range(1, work.p + 1):
        shift[work.r + j] = -(cert_bits + j)
    clauses = []
    for clause in cnf.clauses:
        lits = []
        for lit in clause:
            m = shift[abs(lit)]
            if m > 0:
                lits.append(m if lit > 0 else -m)
            else:
                yv = r + (-m)
                lits.append(yv if lit > 0 else -yv)
        clauses.append(tuple(lits))
    merged = CNF3(r, cert_bits + work.p, tuple(clauses))
    formula, violation, q = cnf_to_pa(merged)
    accepted = []
    for x in range(1 << r):
        ok = eval_formula(formula, (x,))
        accepted.append(ok)
    result = tuple(x for x in range(1 << r) if accepted[x])
    if prefix == "A":
        result = tuple(x for x in range(1 << r) if not accepted[x])
    return (formula, violation, merged, q), result


def count_certificates(f2r, x, r, seed=0):
    """Number of certificates paired with instance x in a concatenated-pair GF.

    Pairs are encoded as x + 2^r * c; the comb GF selecting them is
    t^x (1 - t^(2^(2r))) / (1 - t^(2^r)), and the count is the Hadamard
    product with it, evaluated at one.
    """
    step = 1 << r
    comb = ShortGF(
        1,
        (
            GFTerm(Fraction(1), (x,), ((step,),)),
            GFTerm(Fraction(-1), (x + step * step,), ((step,),)),
        ),
    )
    return evaluate_at_one(hadamard(f2r, comb, seed=seed), seed=seed)


@dataclass
class MinkowskiGadget:
    """Staircase sum construction extracting a union of pieces as one slice."""

    a: ShortGF
    b: ShortGF
    sum_gf: ShortGF
    slice_points: tuple
    union_points: tuple

    @property
    def ok(self):
        return self.slice_points == self.union_points


def minkowski_gadget(pieces, t_bound):
    """Lift pieces to levels u^1..u^k, add the staircase (1-u^k)/(1-u), and
    read the union of the pieces off the u^k slice of the Minkowski sum."""
    k = len(pieces)
    if k == 0:
        raise ValueError("need at least one piece")
    terms = []
    for i, piece in enumerate(pieces, start=1):
        for t in piece.terms:
            terms.append(
                GFTerm(t.coeff, (t.numer[0], i), tuple((d[0], 0) for d in t.denoms))
            )
    a = canonicalize(ShortGF(2, tuple(terms)))
    b = canonicalize(
        ShortGF(
            2,
            (
                GFTerm(Fraction(1), (0, 0), ((0, 1),)),
                GFTerm(Fraction(-1), (0, k), ((0, 1),)),
            ),
        )
    )
    in_box = LatticeBox((t_bound, k + 1))
    out_box = LatticeBox((t_bound, 2 * k + 1))
    sum_gf = minkowski_oracle(a, b, in_box, out_box=out_box)
    # u^k slice via the Hadamard product with u^k / (1 - t)
    comb = ShortGF(
        2, (GFTerm(Fraction(1), (0, k), ((1, 0),)),)
    )
    sliced = hadamard(sum_gf, comb, box=out_box)
    slice_points = tuple(
        sorted(pt[0] for pt in support_points(sliced, out_box))
    )
    union = set()
    for piece in pieces:
        union |= {pt[0] for pt in support_points(piece, (t_bound,))}
    return MinkowskiGadget(a, b, sum_gf, slice_points, tuple(sorted(union)))


# ---------------------------------------------------------------------------
# encoding file format


def format_encoding(enc):
    from .gfcore import format_gf

    n_field = enc.tau.N if enc.tau else 0
    lines = [
        f"enc r={enc.r} p={enc.p} q={enc.q} zdims={enc.zdims} "
        f"npieces={len(enc.pieces)} N={n_field}"
    ]
    lines.append("#circuit")
    lines.append(format_circuit(enc.circuit).rstrip("\n"))
    lines.append("#fr")
    lines.append(format_gf(enc.fr).rstrip("\n"))
    for i, piece in enumerate(enc.pieces):
        lines.append(f"#piece {i}")
        lines.append(format_gf(piece).rstrip("\n"))
    lines.append("#end")
    return "\n".join(lines) + "\n"


def parse_encoding(text):
    from .gfcore import parse_gf

    lines = text.splitlines()
    if not lines or not lines[0].startswith("enc "):
        raise FormatError("missing 'enc' header")
    fields = dict(p.split("=", 1) for p in lines[0].split()[1:] if "=" in p)
    try:
        r = int(fields["r"])
        p = int(fields["p"])
        q = int(fields["q"])
        zdims = int(fields["zdims"])
        n_field = int(fields.get("N", "0"))
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad enc header: {lines[0]!r}") from exc
    sections = {}
    order = []
    cur = None
    for ln in lines[1:]:
        if ln.startswith("#"):
            cur = ln[1:].strip()
            if cur == "end":
                cur = None
                continue
            sections[cur] = []
            order.append(cur)
        elif cur is not None:
            sections[cur].append(ln)
    if "circuit" not in sections or "fr" not in sections:
        raise FormatError("encoding is missing circuit or fr sections")
    circuit = parse_circuit("\n".join(sections["circuit"]))
    fr = parse_gf("\n".join(sections["fr"]))
    pieces = []
    piece_points = []
    for name in order:
        if name.startswith("piece"):
            piece = parse_gf("\n".join(sections[name]))
            pieces.append(piece)
            piece_points.append({(t.numer[0], t.numer[1]) for t in piece.terms})
    cnf = circuit_to_3cnf(circuit)
    box = LatticeBox((1 << r, 1 << p))
    if zdims == 3:
        full_box = LatticeBox((1 << r, 1 << p, 1 << q, 1 << q, 1 << q))
        tau = None
    else:
        tau = TauMap(n_field, (1, 1, 3)) if n_field else None
        full_box = LatticeBox((1 << r, 1 << p, n_field**3))
    return SegmentEncoding(
        r, p, q, box, full_box, fr, tuple(pieces), tuple(piece_points),
        circuit, cnf, zdims=zdims, tau=tau, cell_count=len(pieces),
    )


# ---------------------------------------------------------------------------
# stock circuits


def even_detector(r):
    """Accepts even inputs: a single NOT gate on the low bit."""
    return BooleanCircuit(r, (("NOT", ("x", 1), None),), ("g", 1))


def and_gate(r, i, j):
    """Accepts inputs with bits i and j both set."""
    return BooleanCircuit(r, (("AND", ("x", i), ("x", j)),), ("g", 1))


def constant_false(r):
    """Rejects everything: x1 AND NOT x1."""
    return BooleanCircuit(
        r,
        (("NOT", ("x", 1), None), ("AND", ("x", 1), ("g", 1))),
        ("g", 2),
    )


def square_tester(r):
    """Accepts perfect squares below 2^r, for r = 3 or 4 (hand-minimized)."""
    if r == 3:
        # squares {0,1,4}: not x2 and (not x3 or not x1)
        gates = (
            ("NOT", ("x", 2), None),  # g1
            ("NOT", ("x", 3), None),  # g2
            ("NOT", ("x", 1), None),  # g3
            ("OR", ("g", 2), ("g", 3)),  # g4
            ("AND", ("g", 1), ("g", 4)),  # g5
        )
        return BooleanCircuit(3, gates, ("g", 5))
    if r == 4:
        # squares {0,1,4,9}: not x2 and ((not x4 and (not x3 or not x1))
        #                                 or (x4 and not x3 and x1))
        gates = (
            ("NOT", ("x", 2), None),  # g1
            ("NOT", ("x", 3), None),  # g2
            ("NOT", ("x", 1), None),  # g3
            ("NOT", ("x", 4), None),  # g4
            ("OR", ("g", 2), ("g", 3)),  # g5 = !x3 | !x1
            ("AND", ("g", 4), ("g", 5)),  # g6 = !x4 & g5
            ("AND", ("x", 4), ("g", 2)),  # g7 = x4 & !x3
            ("AND", ("g", 7), ("x", 1)),  # g8 = g7 & x1
            ("OR", ("g", 6), ("g", 8)),  # g9
            ("AND", ("g", 1), ("g", 9)),  # g10
        )
        return BooleanCircuit(4, gates, ("g", 10))
    raise ValueError("square tester circuits are built for r = 3 or 4")


def xor_detector(r):
    """Accepts inputs whose two low bits differ."""
    gates = (
        ("NOT", ("x", 1), None),  # g1 = !x1
        ("NOT", ("x", 2), None),  # g2 = !x2
        ("AND", ("x", 1), ("g", 2)),  # g3 = x1 & !x2
        ("AND", ("g", 1), ("x", 2)),  # g4 = !x1 & x2
        ("OR", ("g", 3), ("g", 4)),  # g5
    )
    return BooleanCircuit(r, gates, ("g", 5))


def parity3():
    """Parity of three input bits."""
    gates = (
        ("NOT", ("x", 1), None),  # g1 = !x1
        ("NOT", ("x", 2), None),  # g2 = !x2
        ("AND", ("x", 1), ("g", 2)),  # g3 = x1 & !x2
        ("AND", ("g", 1), ("x", 2)),  # g4 = !x1 & x2
        ("OR", ("g", 3), ("g", 4)),  # g5 = x1 xor x2
        ("NOT", ("g", 5), None),  # g6 = !(x1 xor x2)
        ("NOT", ("x", 3), None),  # g7 = !x3
        ("AND", ("g", 5), ("g", 7)),  # g8 = (x1^x2) & !x3
        ("AND", ("g", 6), ("x", 3)),  # g9 = !(x1^x2) & x3
        ("OR", ("g", 8), ("g", 9)),  # g10 = parity
    )
    return BooleanCircuit(3, gates, ("g", 10))

"""Data model for short rational generating functions and the expansion oracle.

A short GF is a finite sum of terms  c * t^a / prod_j (1 - t^(b_j))  with
exact rational c and integer exponent vectors a, b_j (b_j != 0).  The series
semantics of such an expression depends on a choice of Laurent region; we fix
it with an *expansion direction* ell (strictly positive, pairwise-distinct
entries).  A GF is canonical under ell when <ell, b> < 0 for every denominator
vector b; the flip identity  1/(1-t^b) = -t^(-b)/(1-t^(-b))  converts any term.

In canonical form each term expands as

    c * (-1)^k * sum_{m_1..m_k >= 1} t^(a - sum_j m_j b_j),

which is locally finite because every step moves the exponent strictly upward
in the ell direction.  `oracle_expand` enumerates these sums over a box and is
the reference semantics every other operation in the package is tested against.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
import random

from .errors import DegenerateDirectionError, FormatError, NonCanonicalError

_PRIME_POOL = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
]


@dataclass(frozen=True)
class ExpansionDirection:
    """Direction fixing the Laurent region; entries are distinct positive primes."""

    ell: tuple
    seed: int = 0

    def __post_init__(self):
        if len(set(self.ell)) != len(self.ell) or any(e <= 0 for e in self.ell):
            raise ValueError("direction entries must be distinct and positive")


def direction_for(nvars, seed=0):
    """Deterministic expansion direction: seed 0 gives the first nvars primes."""
    if seed == 0:
        return ExpansionDirection(tuple(_PRIME_POOL[:nvars]), 0)
    rng = random.Random(seed)
    ell = tuple(rng.sample(_PRIME_POOL, nvars))
    return ExpansionDirection(ell, seed)


@dataclass(frozen=True)
class GFTerm:
    """One summand c * t^numer / prod (1 - t^d) for d in denoms."""

    coeff: Fraction
    numer: tuple
    denoms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "numer", tuple(int(x) for x in self.numer))
        object.__setattr__(
            self, "denoms", tuple(tuple(int(x) for x in d) for d in self.denoms)
        )
        for d in self.denoms:
            if not any(d):
                raise ValueError("denominator exponent vectors must be nonzero")
            if len(d) != len(self.numer):
                raise ValueError("denominator vector length mismatch")


@dataclass(frozen=True)
class ShortGF:
    """A short GF: declared variable count, index bound and a list of terms."""

    nvars: int
    terms: tuple
    index_bound: int = None
    orientation: ExpansionDirection = None

    def __post_init__(self):
        terms = tuple(
            t if isinstance(t, GFTerm) else GFTerm(*t) for t in self.terms
        )
        object.__setattr__(self, "terms", terms)
        for t in terms:
            if len(t.numer) != self.nvars:
                raise ValueError("term arity does not match nvars")
        idx = max((len(t.denoms) for t in terms), default=0)
        if self.index_bound is None:
            object.__setattr__(self, "index_bound", idx)
        elif idx > self.index_bound:
            raise ValueError("term exceeds the declared index bound")

    def with_orientation(self, direction):
        return replace(self, orientation=direction)


@dataclass(frozen=True)
class LatticeBox:
    """Product of half-open ranges [0, U_j), U_j >= 1."""

    sides: tuple

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(int(u) for u in self.sides))
        if any(u < 1 for u in self.sides):
            raise ValueError("box sides must be positive")

    @property
    def nvars(self):
        return len(self.sides)

    def contains(self, point):
        return all(0 <= x < u for x, u in zip(point, self.sides))

    def bounds(self):
        return [[0, u - 1] for u in self.sides]

    def volume(self):
        v = 1
        for u in self.sides:
            v *= u
        return v

    def points(self):
        def rec(prefix, rest):
            if not rest:
                yield tuple(prefix)
                return
            for v in range(rest[0]):
                yield from rec(prefix + [v], rest[1:])

        yield from rec([], list(self.sides))


@dataclass
class CoefficientTable:
    """Exact coefficients over a box; absent keys are zero."""

    table: dict
    box: LatticeBox

    def __getitem__(self, point):
        return self.table.get(tuple(point), Fraction(0))

    def support(self):
        return {p for p, c in self.table.items() if c != 0}

    def is_zero_one(self):
        return all(c in (0, 1) for c in self.table.values())

    def __eq__(self, other):
        if isinstance(other, CoefficientTable):
            return self.support_with_values() == other.support_with_values()
        return NotImplemented

    def support_with_values(self):
        return {p: c for p, c in self.table.items() if c != 0}


def zero_gf(nvars):
    return ShortGF(nvars, ())


def monomial(nvars, point, coeff=1):
    return ShortGF(
        nvars,
        (GFTerm(Fraction(coeff), tuple(point)),),
        orientation=direction_for(nvars),
    )


def from_point_set(points, nvars):
    """Dense GF of a finite point set: one monomial term per point, index 0."""
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    for p in pts:
        if len(p) != nvars:
            raise ValueError("point arity mismatch")
    terms = tuple(GFTerm(Fraction(1), p) for p in pts)
    return ShortGF(nvars, terms, orientation=direction_for(nvars))


def gf_index(f):
    """Maximum denominator count over terms; 0 for pure polynomials."""
    return max((len(t.denoms) for t in f.terms), default=0)


def _entry_bits(v):
    if v == 0:
        return 0
    return 1 + (abs(v) - 1).bit_length()  # ceil(log2|v|) + 1


def gf_length(f):
    """Total bit length of all constants in the displayed form."""
    total = 0
    for t in f.terms:
        pq = abs(t.coeff.numerator * t.coeff.denominator)
        total += _entry_bits(pq) if pq else 0
        for v in t.numer:
            total += _entry_bits(v)
        for d in t.denoms:
            for v in d:
                total += _entry_bits(v)
    return total


def is_canonical(f, direction=None):
    direction = direction or f.orientation
    if direction is None:
        return False
    ell = direction.ell
    return all(
        sum(e * b for e, b in zip(ell, d)) < 0 for t in f.terms for d in t.denoms
    )


def canonicalize(f, direction=None, max_retries=64):
    """Flip denominator vectors until all pair negatively with the direction.

    The flip identity 1/(1-t^b) = -t^(-b)/(1-t^(-b)) preserves the rational
    function; a direction with <ell, b> = 0 for some b is regenerated from its
    seed.
    """
    if direction is None:
        direction = f.orientation or direction_for(f.nvars)
    seed = direction.seed
    for attempt in range(max_retries):
        ell = direction.ell
        degenerate = any(
            sum(e * b for e, b in zip(ell, d)) == 0
            for t in f.terms
            for d in t.denoms
        )
        if not degenerate:
            break
        seed += 1
        direction = direction_for(f.nvars, seed)
    else:
        raise DegenerateDirectionError(
            f"no valid direction after {max_retries} retries"
        )
    ell = direction.ell
    new_terms = []
    for t in f.terms:
        coeff = t.coeff
        numer = list(t.numer)
        denoms = []
        for d in t.denoms:
            if sum(e * b for e, b in zip(ell, d)) > 0:
                coeff = -coeff
                numer = [a - b for a, b in zip(numer, d)]
                denoms.append(tuple(-b for b in d))
            else:
                denoms.append(d)
        new_terms.append(GFTerm(coeff, tuple(numer), tuple(denoms)))
    return ShortGF(f.nvars, tuple(new_terms), f.index_bound, direction)


def term_positive_form(term):
    """Rewrite a canonical term as c' * sum_{m >= 0} t^(apex + sum m_j v_j).

    Returns (coeff, apex, vecs) with every vec pairing positively with the
    direction; this is the expansion actually enumerated by the oracle and
    consumed by the Hadamard machinery.
    """
    k = len(term.denoms)
    coeff = term.coeff if k % 2 == 0 else -term.coeff
    apex = term.numer
    for d in term.denoms:
        apex = tuple(a - b for a, b in zip(apex, d))
    vecs = tuple(tuple(-b for b in d) for d in term.denoms)
    return coeff, apex, vecs


def term_from_positive(coeff, apex, vecs):
    """Inverse of `term_positive_form`: raw (*) data from expanded data."""
    k = len(vecs)
    c = Fraction(coeff) if k % 2 == 0 else -Fraction(coeff)
    numer = apex
    for v in vecs:
        numer = tuple(a - v_ for a, v_ in zip(numer, v))
    denoms = tuple(tuple(-x for x in v) for v in vecs)
    return GFTerm(c, numer, denoms)


def oracle_expand(f, box, limit=None):
    """Exact coefficient of t^x for every x in the box, by direct enumeration.

    Requires a canonicalized input; enumerates, per term, all multiplier
    tuples whose exponent stays inside the box (each step strictly increases
    the pairing with ell, which is bounded on the box, so the walk terminates).
    """
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    if f.orientation is None or not is_canonical(f):
        raise NonCanonicalError("oracle_expand requires a canonicalized GF")
    ell = f.orientation.ell
    max_ell = sum(e * (u - 1) for e, u in zip(ell, box.sides))
    table = {}
    steps = 0
    for term in f.terms:
        coeff, apex, vecs = term_positive_form(term)
        if coeff == 0:
            continue
        weights = [sum(e * v for e, v in zip(ell, vec)) for vec in vecs]

        def rec(point, level, pairing):
            nonlocal steps
            steps += 1
            if limit is not None and steps > limit:
                from .errors import ResourceLimitError

                raise ResourceLimitError("oracle expansion exceeded step limit")
            if pairing > max_ell:
                return
            if level == len(vecs):
                if box.contains(point):
                    table[point] = table.get(point, Fraction(0)) + coeff
                return
            vec = vecs[level]
            w = weights[level]
            cur = point
            p = pairing
            while p <= max_ell:
                rec(cur, level + 1, p)
                cur = tuple(a + b for a, b in zip(cur, vec))
                p += w

        rec(apex, 0, sum(e * a for e, a in zip(ell, apex)))
    table = {k: v for k, v in table.items() if v != 0}
    return CoefficientTable(table, box)


def support_in_box(f, box, limit=None):
    g = f if is_canonical(f) else canonicalize(f)
    return oracle_expand(g, box, limit=limit).support()


def normalized(f):
    """Merge terms with identical (numer, denoms) and drop zero terms.

    Terms are not merged automatically anywhere else; this is an explicit pass.
    """
    acc = {}
    order = []
    for t in f.terms:
        key = (t.numer, tuple(sorted(t.denoms)))
        if key not in acc:
            acc[key] = Fraction(0)
            order.append(key)
        acc[key] += t.coeff
    terms = tuple(
        GFTerm(acc[key], key[0], key[1]) for key in order if acc[key] != 0
    )
    return ShortGF(f.nvars, terms, f.index_bound, f.orientation)


def concat(f, g):
    """Plain term concatenation (the sum f + g)."""
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    bound = max(f.index_bound, g.index_bound)
    orient = f.orientation if f.orientation == g.orientation else None
    return ShortGF(f.nvars, f.terms + g.terms, bound, orient)


def scale(f, c):
    c = Fraction(c)
    return ShortGF(
        f.nvars,
        tuple(GFTerm(t.coeff * c, t.numer, t.denoms) for t in f.terms),
        f.index_bound,
        f.orientation,
    )


def box_gf(box):
    """GF of a full box as the product expansion of prod_j (1-t_j^U_j)/(1-t_j).

    2^n terms, each with at most n unit denominator vectors.
    """
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    n = box.nvars
    terms = []
    for mask in range(1 << n):
        numer = [0] * n
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                numer[j] = box.sides[j]
                sign = -sign
        denoms = tuple(
            tuple(1 if i == j else 0 for i in range(n)) for j in range(n)
        )
        terms.append(GFTerm(Fraction(sign), tuple(numer), denoms))
    return ShortGF(n, tuple(terms))


# ---------------------------------------------------------------------------
# text format


def format_gf(f):
    """One object per file: header line then one line per term.

    Round-trips bit-exactly: read(format(f)) == f up to orientation.
    """
    lines = [f"gf nvars={f.nvars} index={f.index_bound}"]
    for t in f.terms:
        a = ",".join(str(x) for x in t.numer)
        b = ";".join(",".join(str(x) for x in d) for d in t.denoms)
        c = f"{t.coeff.numerator}/{t.coeff.denominator}"
        lines.append(f"term c={c} a={a} b={b}")
    return "\n".join(lines) + "\n"


def parse_gf(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("gf "):
        raise FormatError("missing 'gf' header")
    header = lines[0].split()
    fields = dict(part.split("=", 1) for part in header[1:] if "=" in part)
    try:
        nvars = int(fields["nvars"])
        index_bound = int(fields["index"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header: {lines[0]!r}") from exc
    terms = []
    for ln in lines[1:]:
        if not ln.startswith("term "):
            raise FormatError(f"unexpected line: {ln!r}")
        parts = dict(p.split("=", 1) for p in ln.split()[1:] if "=" in p)
        try:
            p, q = parts["c"].split("/")
            coeff = Fraction(int(p), int(q))
            numer = tuple(int(x) for x in parts["a"].split(",")) if parts["a"] else ()
            braw = parts.get("b", "")
            denoms = tuple(
                tuple(int(x) for x in grp.split(","))
                for grp in braw.split(";")
                if grp
            )
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad term line: {ln!r}") from exc
        if len(numer) != nvars:
            raise FormatError(f"term arity {len(numer)} != nvars {nvars}")
        terms.append(GFTerm(coeff, numer, denoms))
    try:
        return ShortGF(nvars, tuple(terms), index_bound)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_gf(f, path):
    with open(path, "w") as fh:
        fh.write(format_gf(f))


def read_gf(path):
    with open(path) as fh:
        return parse_gf(fh.read())

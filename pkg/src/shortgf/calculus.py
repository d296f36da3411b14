"""Operation suite over short GFs.

Exact evaluation at the all-ones point, monomial substitution, Hadamard and
linear-functional Hadamard products (built per term pair through an auxiliary
equality-constrained polytope), boolean set operations on box-supported GFs,
coefficient extraction, norm by bisection, oracle-backed projection and
Minkowski operations, and positional-base compression/decompression of
finite supports.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from ._subst import evaluate_at_one, substitute
from .barvinok import lattice_gf_mapped
from .errors import (
    ResourceLimitError,
    SpecializationError,
    UnboundedPolyhedronError,
    ZeroImageError,
)
from .gfcore import (
    GFTerm,
    LatticeBox,
    ShortGF,
    canonicalize,
    concat,
    direction_for,
    from_point_set,
    gf_index,
    is_canonical,
    monomial,
    normalized,
    oracle_expand,
    scale,
    term_positive_form,
    zero_gf,
)

__all__ = [
    "TauMap",
    "evaluate_at_one",
    "substitute_monomials",
    "specialize_vars",
    "tau_hadamard",
    "hadamard",
    "multiply",
    "boolean_combine",
    "complement_in_box",
    "coefficient",
    "norm",
    "proj_member",
    "oracle_project",
    "minkowski_oracle",
    "support_points",
    "compress",
    "decompress",
    "choose_tau",
    "box_range_gf",
    "gf_equal_on_box",
]


@dataclass(frozen=True)
class TauMap:
    """Positional-base packing map: consecutive variable groups into one
    coordinate each via x_1 + N x_2 + N^2 x_3 + ...  N is a power of two."""

    N: int
    grouping: tuple

    def __post_init__(self):
        object.__setattr__(self, "grouping", tuple(int(s) for s in self.grouping))
        if self.N < 2 or self.N & (self.N - 1):
            raise ValueError("N must be a power of two >= 2")
        if any(s < 1 for s in self.grouping):
            raise ValueError("group sizes must be positive")

    @property
    def nvars(self):
        return sum(self.grouping)

    @property
    def ngroups(self):
        return len(self.grouping)

    def rows(self):
        """The ngroups x nvars packing matrix."""
        out = []
        pos = 0
        for size in self.grouping:
            row = [0] * self.nvars
            p = 1
            for i in range(size):
                row[pos + i] = p
                p *= self.N
            out.append(tuple(row))
            pos += size
        return out

    def apply(self, point):
        return tuple(la.dot(r, point) for r in self.rows())


def substitute_monomials(f, vrows, out_nvars, merge=False):
    """Map exponents linearly: numerators a -> V a, denominators b -> V b.

    Rejects any denominator with zero image; the limit-taking variant is
    reserved for the specialization paths where finite support is guaranteed.
    """
    return substitute(f, [tuple(r) for r in vrows], out_nvars, merge=merge)


def specialize_vars(f, keep, seed=0, merge=True):
    """Set all variables outside `keep` to one; requires finite support.

    Collapsed denominator factors are resolved by the exact perturbation
    limit, so the result is a faithful short GF of the specialized series.
    """
    keep = list(keep)
    vrows = [
        tuple(1 if j == k else 0 for j in range(f.nvars)) for k in keep
    ]
    return substitute(
        f, vrows, len(keep), allow_collapse=True, seed=seed, merge=merge
    )


# ---------------------------------------------------------------------------
# Hadamard machinery


def _positive_terms(f):
    g = f if is_canonical(f) else canonicalize(f)
    return [term_positive_form(t) for t in g.terms], g


def _pair_gf(cA, aA, vecsA, cB, aB, vecsB, tau_rows, box, out_nvars, seed, pinned):
    """GF of one term pair of a linear-functional Hadamard product.

    Solutions (zeta, xi) >= 0 of tau(aA + sum zeta_i B_i) = aB + sum xi_j D_j
    (optionally with aA + sum zeta_i B_i confined to the box) are mapped to
    exponents aA + sum zeta_i B_i.  `pinned` marks the identity functional, in
    which case a monomial second operand bounds the system without a box.
    """
    p, q = len(vecsA), len(vecsB)
    dB = len(aB)
    coeff = cA * cB
    if coeff == 0:
        return zero_gf(out_nvars)
    tau_a = tuple(la.dot(r, aA) for r in tau_rows)
    if p == 0 and q == 0:
        if tau_a == tuple(aB):
            return canonicalize(ShortGF(out_nvars, (GFTerm(coeff, aA),)))
        return zero_gf(out_nvars)
    if p == 0 and q == 1 and dB == 1:
        diff = tau_a[0] - aB[0]
        d0 = vecsB[0][0]
        if diff % d0 == 0 and diff // d0 >= 0:
            return canonicalize(ShortGF(out_nvars, (GFTerm(coeff, aA),)))
        return zero_gf(out_nvars)

    m = p + q
    ineqs = []
    for i in range(m):
        row = [0] * m
        row[i] = -1
        ineqs.append((tuple(row), 0))
    if p > 0 and not (q == 0 and pinned):
        if box is None:
            raise UnboundedPolyhedronError(
                "a support box is required for this Hadamard product"
            )
        for c in range(out_nvars):
            up = [vecsA[i][c] for i in range(p)] + [0] * q
            ineqs.append((tuple(up), box.sides[c] - 1 - aA[c]))
            ineqs.append((tuple(-x for x in up), aA[c]))
    eq_rows = []
    eq_rhs = []
    for r in range(dB):
        row = [la.dot(tau_rows[r], vecsA[i]) for i in range(p)]
        row += [-vecsB[j][r] for j in range(q)]
        eq_rows.append(tuple(row))
        eq_rhs.append(aB[r] - tau_a[r])
    exp_rows = [
        tuple(vecsA[i][c] for i in range(p)) + tuple(0 for _ in range(q))
        for c in range(out_nvars)
    ]
    return lattice_gf_mapped(
        ineqs, eq_rows, eq_rhs, m, exp_rows, tuple(aA), out_nvars,
        coeff_factor=coeff, seed=seed,
    )


def tau_hadamard(f, g, tau_rows, box=None, seed=0, merge=True):
    """Linear-functional Hadamard product: coefficients alpha_x * beta_tau(x).

    f ranges over the output variables; g over the functional's target
    coordinates; tau_rows is the (g.nvars x f.nvars) integer matrix of the
    functional.  Bilinear over term pairs; each pair goes through a bounded
    auxiliary polytope, so the result's index is at most p + q for single
    terms with p and q denominators.
    """
    if isinstance(tau_rows, TauMap):
        tau_rows = tau_rows.rows()
    tau_rows = [tuple(r) for r in tau_rows]
    if box is not None and not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    terms_f, _ = _positive_terms(f)
    terms_g, _ = _positive_terms(g)
    ident = [
        tuple(1 if i == j else 0 for j in range(f.nvars))
        for i in range(len(tau_rows))
    ]
    pinned = len(tau_rows) == f.nvars and tau_rows == ident
    collected = []
    for cA, aA, vecsA in terms_f:
        for cB, aB, vecsB in terms_g:
            part = _pair_gf(
                cA, aA, vecsA, cB, aB, vecsB, tau_rows, box, f.nvars, seed, pinned
            )
            collected.extend(part.terms)
    out = canonicalize(ShortGF(f.nvars, tuple(collected)))
    return normalized(out) if merge else out


def hadamard(f, g, box=None, seed=0, merge=True):
    """Coefficientwise product; the identity functional applied coordinatewise."""
    if f.nvars != g.nvars:
        raise ValueError("operands must share a variable space")
    ident = [
        tuple(1 if i == j else 0 for j in range(f.nvars))
        for i in range(f.nvars)
    ]
    return tau_hadamard(f, g, ident, box=box, seed=seed, merge=merge)


def multiply(f, g, merge=True):
    """Series product (Cauchy/Minkowski with multiplicity), term by term."""
    if f.nvars != g.nvars:
        raise ValueError("operands must share a variable space")
    terms = []
    for s in f.terms:
        for t in g.terms:
            c = s.coeff * t.coeff
            if c == 0:
                continue
            terms.append(
                GFTerm(c, la.vadd(s.numer, t.numer), s.denoms + t.denoms)
            )
    out = ShortGF(f.nvars, tuple(terms))
    out = canonicalize(out)
    return normalized(out) if merge else out


# ---------------------------------------------------------------------------
# boolean operations on box-supported GFs


def _check_zero_one(f, box, limit=None):
    table = oracle_expand(f if is_canonical(f) else canonicalize(f), box, limit=limit)
    if not table.is_zero_one():
        raise ValueError("operand is not a 0/1 generating function on the box")
    return table


def boolean_combine(f, g, box, mode, check=True, seed=0):
    """Set algebra on supports: mode is one of 'intersect', 'union', 'minus'."""
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    if check:
        _check_zero_one(f, box)
        _check_zero_one(g, box)
    h = hadamard(f, g, box=box, seed=seed)
    if mode in ("intersect", "&"):
        return h
    if mode in ("union", "|"):
        return normalized(canonicalize(concat(concat(f, g), scale(h, -1))))
    if mode in ("minus", "\\"):
        return normalized(canonicalize(concat(f, scale(h, -1))))
    raise ValueError(f"unknown mode {mode!r}")


def box_range_gf(lows, highs):
    """GF of the integer box prod [lo_j, hi_j], as a 2^n-term product expansion."""
    n = len(lows)
    terms = []
    for mask in range(1 << n):
        numer = list(lows)
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                numer[j] = highs[j] + 1
                sign = -sign
        denoms = tuple(
            tuple(1 if i == j else 0 for i in range(n)) for j in range(n)
        )
        terms.append(GFTerm(Fraction(sign), tuple(numer), denoms))
    return canonicalize(ShortGF(n, tuple(terms)))


def complement_in_box(f, box, check=True, seed=0):
    """Finite complement of the support within the box."""
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    full = box_range_gf([0] * box.nvars, [u - 1 for u in box.sides])
    return boolean_combine(full, f, box, "minus", check=check, seed=seed)


def coefficient(f, point, seed=0):
    """Coefficient at one exponent: Hadamard with the monomial, evaluated at one."""
    h = hadamard(f, monomial(f.nvars, point), seed=seed)
    return evaluate_at_one(h, seed=seed)


def norm(f, box, seed=0):
    """Coordinatewise support maxima within the box (None when empty).

    Found by bisection: intersect with half-box GFs and test nonemptiness via
    evaluation at one.  The max-norm is the largest coordinate of the result.
    """
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    n = f.nvars
    if evaluate_at_one(hadamard(f, box_range_gf([0] * n, [u - 1 for u in box.sides]), box=box, seed=seed)) == 0:
        return None
    maxima = []
    for j in range(n):
        lo, hi = 0, box.sides[j] - 1

        def nonempty(m):
            lows = [0] * n
            highs = [u - 1 for u in box.sides]
            lows[j] = m
            half = box_range_gf(lows, highs)
            return evaluate_at_one(hadamard(f, half, box=box, seed=seed)) != 0

        while lo < hi:
            mid = (lo + hi + 1) // 2
            if nonempty(mid):
                lo = mid
            else:
                hi = mid - 1
        maxima.append(lo)
    return tuple(maxima)


def proj_member(f, point, keep=None, seed=0):
    """Is `point` in the projection of supp(f) onto the kept coordinates?

    Specializes the dropped variables to one (exact limits handle collapsed
    factors; finite support required) and tests the coefficient.
    """
    if keep is None:
        keep = list(range(len(point)))
    g = specialize_vars(f, keep, seed=seed)
    return coefficient(g, point, seed=seed) != 0


def oracle_project(f, keep, box, mode="project", limit=None):
    """Brute-force projection of a box-supported GF onto kept coordinates.

    mode 'project' returns the projected support as a dense GF; 'anti' its
    complement within the kept sub-box; 'specialize' verifies that every
    projected point has exactly one witness before projecting.
    """
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    keep = list(keep)
    dropped = [i for i in range(f.nvars) if i not in keep]
    support = sorted(
        support_points(f, box, limit=limit)
    )
    if mode == "specialize":
        witness = {}
        for pt in support:
            key = tuple(pt[i] for i in keep)
            w = tuple(pt[i] for i in dropped)
            if key in witness and witness[key] != w:
                raise SpecializationError(key, witness[key], w)
            witness[key] = w
    projected = sorted({tuple(pt[i] for i in keep) for pt in support})
    if mode == "anti":
        sub = LatticeBox(tuple(box.sides[i] for i in keep))
        if limit is not None and sub.volume() > limit:
            raise ResourceLimitError("anti-projection box exceeds the point limit")
        proj_set = set(projected)
        pts = [p for p in sub.points() if p not in proj_set]
        return from_point_set(pts, len(keep))
    return from_point_set(projected, len(keep))


def support_points(f, box, limit=None):
    """Support of a GF within a box, via the expansion oracle."""
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    g = f if is_canonical(f) else canonicalize(f)
    return oracle_expand(g, box, limit=limit).support()


def minkowski_oracle(f, g, box, out_box=None, limit=None):
    """Pointwise-sum support of two box-supported GFs, as a dense GF."""
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    if out_box is None:
        out_box = box
    elif not isinstance(out_box, LatticeBox):
        out_box = LatticeBox(tuple(out_box))
    sa = support_points(f, box, limit=limit)
    sb = support_points(g, box, limit=limit)
    sums = {la.vadd(a, b) for a in sa for b in sb}
    for pt in sums:
        if not out_box.contains(pt):
            raise ValueError(f"Minkowski sum point {pt} overflows the output box")
    return from_point_set(sorted(sums), f.nvars)


# ---------------------------------------------------------------------------
# compression


def choose_tau(f, grouping, box=None, start_exp=1, max_doublings=48):
    """Smallest power-of-two base covering the box whose packing map keeps
    every denominator image nonzero, doubling on degeneracy."""
    grouping = tuple(grouping)
    need = 2
    if box is not None:
        sides = box.sides if isinstance(box, LatticeBox) else tuple(box)
        need = max(2, max(sides))
    n_pow = 1 << max(start_exp, (need - 1).bit_length())
    denoms = [d for t in f.terms for d in t.denoms]
    for _ in range(max_doublings):
        tau = TauMap(n_pow, grouping)
        rows = tau.rows()
        if all(
            any(la.dot(r, d) for r in rows) for d in denoms
        ):
            return tau
        n_pow *= 2
    raise ZeroImageError(-1, denoms[0])


def compress(f, tau, merge=True):
    """Pack each variable group into one coordinate: support maps through tau.

    Injective on the [0,N) box, so supports (and the evaluation at one) are
    preserved; denominator images must be nonzero (see `choose_tau`).
    """
    return substitute_monomials(f, tau.rows(), tau.ngroups, merge=merge)


def decompress(f, tau, seed=0, merge=True):
    """Recover the unpacked support: functional Hadamard of the box GF with f."""
    n = tau.nvars
    box = LatticeBox(tuple(tau.N for _ in range(n)))
    full = box_range_gf([0] * n, [tau.N - 1] * n)
    return tau_hadamard(full, f, tau.rows(), box=box, seed=seed, merge=merge)


def gf_equal_on_box(f, g, box, limit=None):
    """Semantic, box-relative equality: identical oracle tables."""
    if not isinstance(box, LatticeBox):
        box = LatticeBox(tuple(box))
    ta = oracle_expand(f if is_canonical(f) else canonicalize(f), box, limit=limit)
    tb = oracle_expand(g if is_canonical(g) else canonicalize(g), box, limit=limit)
    return ta.support_with_values() == tb.support_with_values()

"""Short GFs of lattice points of rational polyhedra in fixed low dimension.

Pipeline: enumerate vertices as basic feasible solutions, take the dual of
each tangent cone (the cone spanned by the tight constraint normals),
triangulate it, decompose each simplicial piece into unimodular signed cones
by repeated replacement with a short parallelepiped vector, dualize the
unimodular pieces back, and sum the vertex-cone rational functions (Brion).
Lower-dimensional pieces are discarded in the dual, where they correspond to
cones with lines and contribute zero.

Lower-dimensional and equality-constrained inputs are reduced to the
full-dimensional case by an integer parameterization of their affine lattice
hull (column Hermite form), so the same core serves the equality-constrained
auxiliary polytopes of the Hadamard machinery.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import _linalg as la
from ._subst import substitute
from .errors import (
    FormatError,
    ResourceLimitError,
    UnboundedPolyhedronError,
)
from .gfcore import (
    GFTerm,
    ShortGF,
    canonicalize,
    direction_for,
    monomial,
    zero_gf,
)

_PPD_CAP = 4096
_LLL_THRESHOLD = 32  # above this index, prefer basis-reduced short vectors


@dataclass(frozen=True)
class Polyhedron:
    """Rational H-polyhedron {x : A x <= b}."""

    A: tuple
    b: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(
            self, "A", tuple(tuple(Fraction(x) for x in row) for row in self.A)
        )
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        if any(len(row) != self.n for row in self.A) or len(self.A) != len(self.b):
            raise ValueError("inconsistent dimensions")

    def scaled_int_rows(self):
        """Integer rows defining the same rational polyhedron."""
        rows = []
        for coeffs, rhs in zip(self.A, self.b):
            denom = rhs.denominator
            for c in coeffs:
                denom = denom * c.denominator // gcd(denom, c.denominator)
            ic = tuple(int(c * denom) for c in coeffs)
            rows.append((ic, int(rhs * denom)))
        return rows

    def lattice_rows(self):
        """Integer rows tightened to the same set of integer points."""
        out = []
        for coeffs, rhs in self.scaled_int_rows():
            norm = la.normalize_row(coeffs, rhs)
            if norm is None:
                if rhs < 0:
                    return None  # trivially empty
                continue
            out.append(norm)
        return out

    def contains(self, point):
        return all(
            sum(c * x for c, x in zip(row, point)) <= rhs
            for row, rhs in zip(self.A, self.b)
        )

    def is_empty(self):
        """Exact rational emptiness via basic solutions (bounded inputs)."""
        rows = self.scaled_int_rows()
        if not rows:
            return False
        if la.rank_int([r[0] for r in rows]) < self.n:
            # no vertex; fall back to integer search over a derived box
            return not self.lattice_bounds_or_none()
        return not la.vertices_of(rows, self.n)

    def lattice_bounds_or_none(self):
        rows = self.lattice_rows()
        if rows is None:
            return None
        bounds = la.propagate_bounds(rows, [[None, None]] * self.n, rounds=6)
        if bounds is None:
            return None
        if any(lo is None or hi is None for lo, hi in bounds):
            return None
        return bounds


@dataclass(frozen=True)
class SignedCone:
    """apex + cone(generators), carrying a +1/-1 multiplicity."""

    apex: tuple
    generators: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "apex", tuple(Fraction(x) for x in self.apex))
        gens = tuple(la.primitive(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        n = len(self.apex)
        if any(len(g) != n for g in gens):
            raise ValueError("generator arity mismatch")
        if gens and la.rank_int(list(gens)) != len(gens):
            raise ValueError("generators must be linearly independent")


def cone_index(generators, n):
    """Lattice index of the cone's generator lattice inside its saturation.

    Equals |det| for full-dimensional simplicial cones; in general the gcd of
    all maximal minors of the generator matrix.
    """
    k = len(generators)
    cols = list(generators)
    g = 0
    for rows in combinations(range(n), k):
        mat = [[cols[j][i] for j in range(k)] for i in rows]
        g = gcd(g, abs(la.det_int(mat)))
        if g == 1:
            return 1
    return g


# ---------------------------------------------------------------------------
# simplicial decomposition


def _parallelepiped_point(gen_cols):
    """Nonzero lattice point of the half-open parallelepiped, as (point, lam).

    Chooses the point minimizing max lam_i (ties broken lexicographically);
    lam entries lie in [0,1).
    """
    pts = la.enumerate_parallelepiped(gen_cols, max_points=_PPD_CAP)
    best = None
    for pt, lam in pts:
        if not any(pt):
            continue
        key = (max(lam), pt)
        if best is None or key < best[0]:
            best = (key, pt, lam)
    if best is None:
        return None
    return best[1], best[2]


def _short_vector_lll(gen_cols):
    """Short nonzero vector w = W lam with all |lam_i| < 1, via basis reduction."""
    d = len(gen_cols)
    w_rows = tuple(tuple(gen_cols[j][i] for j in range(d)) for i in range(d))
    det = la.det_int(w_rows)
    inv = la.matrix_inverse_fraction(w_rows)
    # columns of det * W^{-1} form a basis of the lam-lattice, scaled by det
    basis = [
        tuple(int(inv[i][j] * abs(det)) for i in range(d)) for j in range(d)
    ]
    reduced = la.lll_reduce(basis)
    best = None
    for beta in reduced:
        if not any(beta):
            continue
        m = max(abs(x) for x in beta)
        if m >= abs(det):
            continue
        if best is None or m < best[0]:
            lam = tuple(Fraction(x, abs(det)) for x in beta)
            w = tuple(
                sum(gen_cols[j][i] * lam[j] for j in range(d)) for i in range(d)
            )
            if all(x.denominator == 1 for x in w) and any(
                x.numerator for x in w
            ):
                best = (m, tuple(int(x) for x in w), lam)
    if best is None:
        return None
    return best[1], best[2]


def decompose_unimodular_fulldim(gen_cols, sign):
    """Signed unimodular decomposition of a full-dimensional simplicial cone.

    Valid modulo lower-dimensional cones: replacing a generator with a short
    parallelepiped (or basis-reduced) vector w yields child cones signed by
    the orientation of w's coefficient.  Returns a list of (sign, gen_cols).
    """
    d = len(gen_cols)
    out = []
    stack = [(sign, tuple(gen_cols))]
    guard = 0
    while stack:
        guard += 1
        if guard > 200_000:
            raise ResourceLimitError("cone decomposition did not converge")
        s, cols = stack.pop()
        w_rows = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
        det = abs(la.det_int(w_rows))
        if det == 0:
            raise ValueError("degenerate simplicial cone")
        if det == 1:
            out.append((s, cols))
            continue
        found = None
        if det <= _LLL_THRESHOLD:
            found = _parallelepiped_point(cols)
        if found is None:
            found = _short_vector_lll(cols)
        if found is None:
            # enumerate regardless of cap as a last resort
            found = _parallelepiped_point_nocap(cols)
        w, lam = found
        for i in range(d):
            if lam[i] == 0:
                continue
            child = tuple(w if j == i else cols[j] for j in range(d))
            child_sign = s if lam[i] > 0 else -s
            stack.append((child_sign, child))
    return out


def _parallelepiped_point_nocap(gen_cols):
    pts = la.enumerate_parallelepiped(gen_cols, max_points=10_000_000)
    best = None
    for pt, lam in pts:
        if not any(pt):
            continue
        key = (max(lam), pt)
        if best is None or key < best[0]:
            best = (key, pt, lam)
    if best is None:
        raise ValueError("unimodular cone reached decomposition loop")
    return best[1], best[2]


# ---------------------------------------------------------------------------
# triangulation (pulling)


def _coordinates_in_span(gens):
    """Express vectors of a rank-r family in r coordinates (integer-scaled)."""
    rows = [list(g) for g in gens]
    r = la.rank_int(rows)
    # choose r independent generators as a basis
    basis = []
    for g in gens:
        if la.rank_int([list(x) for x in basis + [g]]) > len(basis):
            basis.append(g)
        if len(basis) == r:
            break
    # choose r pivot columns of the basis
    cols = []
    for j in range(len(gens[0])):
        trial = cols + [j]
        sub = [[bg[c] for c in trial] for bg in basis]
        if la.rank_int(sub) == len(trial):
            cols.append(j)
        if len(cols) == r:
            break
    bmat = [[bg[c] for c in cols] for bg in basis]  # r x r
    coords = []
    for g in gens:
        sol = la.solve_square(bmat, [g[c] for c in cols])
        # scale to integers
        denom = 1
        for x in sol:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        coords.append(tuple(int(x * denom) for x in sol))
    return coords, r


def triangulate_cone(gens):
    """Pulling triangulation of a pointed cone given by generators.

    Returns a list of tuples of generator indices, each a simplicial cone of
    the same dimension; ties broken lexicographically on the generator list.
    """
    gens = [la.primitive(g) for g in gens]
    order = sorted(range(len(gens)), key=lambda i: gens[i])
    uniq = []
    index_of = {}
    for i in order:
        if gens[i] not in index_of:
            index_of[gens[i]] = len(uniq)
            uniq.append(gens[i])
    coords, r = _coordinates_in_span(uniq)
    simplices = _triangulate_rec(coords, list(range(len(uniq))), r)
    return [tuple(uniq[i] for i in s) for s in simplices]


def _triangulate_rec(coords, active, r):
    """Triangulate cone(coords[i] for i in active) of rank r (in r-coords)."""
    if len(active) == r:
        return [tuple(active)]
    sub = [coords[i] for i in active]
    subc, rr = _coordinates_in_span(sub)
    local = {i: subc[pos] for pos, i in enumerate(active)}
    v0 = active[0]
    simplices = []
    seen_facets = set()
    for combo in combinations(active, rr - 1):
        mat = [local[i] for i in combo]
        if la.rank_int([list(m) for m in mat]) != rr - 1:
            continue
        h = la.kernel_vector(mat, rr)
        if h is None:
            continue
        vals = {i: la.dot(h, local[i]) for i in active}
        if all(v >= 0 for v in vals.values()):
            pass
        elif all(v <= 0 for v in vals.values()):
            vals = {i: -v for i, v in vals.items()}
        else:
            continue
        facet = tuple(i for i in active if vals[i] == 0)
        if facet in seen_facets or v0 in facet:
            continue
        seen_facets.add(facet)
        for s in _triangulate_rec(coords, list(facet), rr - 1):
            simplices.append((v0,) + s)
    if not simplices:
        # active spans rank r with exactly r independent among them
        indep = []
        for i in active:
            if la.rank_int([list(coords[j]) for j in indep + [i]]) > len(indep):
                indep.append(i)
        return [tuple(indep)]
    return simplices


# ---------------------------------------------------------------------------
# vertex machinery


_DUAL_CACHE = {}


def _dual_cone_gf_terms(tight_normals, d):
    """Positive-form (sign, gen_cols) pairs for one vertex's tangent cone.

    The dual of the tangent cone is spanned by the tight constraint normals;
    triangulate and decompose there, then polarize unimodular pieces back.
    Cached on the normal set: the same cone shape recurs across vertices.
    """
    key = tuple(sorted({la.primitive(nrm) for nrm in tight_normals}))
    hit = _DUAL_CACHE.get(key)
    if hit is not None:
        return hit
    results = []
    for simplex in triangulate_cone(list(key)):
        cols = [tuple(g) for g in simplex]
        for sign, ucols in decompose_unimodular_fulldim(cols, 1):
            w_rows = [[ucols[j][i] for j in range(d)] for i in range(d)]
            inv = la.matrix_inverse_fraction(w_rows)
            # polar generators g_i solve W^T G = -I: columns of -(W^{-1})^T,
            # i.e. the negated rows of W^{-1}
            polar_cols = [
                tuple(int(-inv[i][j]) for j in range(d)) for i in range(d)
            ]
            results.append((sign, polar_cols))
    if len(_DUAL_CACHE) > 20_000:
        _DUAL_CACHE.clear()
    _DUAL_CACHE[key] = results
    return results


def _unimodular_cone_term(vertex, gen_cols, sign, d):
    """GF of the shifted unimodular cone: sign * t^a / prod(1 - t^g).

    a is the unique lattice point of apex + sum [0,1) g_i.
    """
    mat = [[gen_cols[j][i] for j in range(d)] for i in range(d)]
    gamma = la.solve_square(mat, vertex)
    apex = [0] * d
    for j in range(d):
        c = -((-gamma[j].numerator) // gamma[j].denominator)  # ceil
        for i in range(d):
            apex[i] += c * gen_cols[j][i]
    return Fraction(sign), tuple(apex), tuple(gen_cols)


def _brion_fulldim(rows, d):
    """Positive-form term triples of the lattice-point GF of a full-dim polytope."""
    verts = la.vertices_of(rows, d)
    triples = []
    for vertex, tight in verts:
        normals = [rows[i][0] for i in tight]
        for sign, polar_cols in _dual_cone_gf_terms(normals, d):
            triples.append(_unimodular_cone_term(vertex, polar_cols, sign, d))
    return triples, verts


class _EmptyPolytope(Exception):
    pass


def _reduce_to_fulldim(ineq_rows, eq_rows, eq_rhs, m):
    """Reduce {y : A y <= b, E y = h} to a full-dimensional system.

    Returns (rows, y0, k_cols) with the integer points of the input in
    bijection with those of {z : rows hold}, via y = y0 + K z.  Raises
    _EmptyPolytope when there are no integer points (bounded inputs only).
    Implicit equalities are found as opposite row pairs and, failing that,
    from the affine hull of the vertex set.
    """
    y0 = tuple(0 for _ in range(m))
    k_cols = [tuple(1 if i == j else 0 for i in range(m)) for j in range(m)]
    rows = []
    for coeffs, rhs in ineq_rows:
        norm = la.normalize_row(coeffs, rhs)
        if norm is None:
            if rhs < 0:
                raise _EmptyPolytope
            continue
        rows.append(norm)
    eqs = [(tuple(c), r) for c, r in zip(eq_rows, eq_rhs)]

    for _ in range(m + 2):
        if eqs:
            d_prev = len(k_cols)
            sol = la.solve_affine_lattice(
                [list(c) for c, _ in eqs], [r for _, r in eqs], d_prev
            )
            if sol is None:
                raise _EmptyPolytope
            z0, kc = sol
            y0 = tuple(
                y0[i] + sum(k_cols[j][i] * z0[j] for j in range(d_prev))
                for i in range(m)
            )
            k_cols = [
                tuple(
                    sum(k_cols[j][i] * col[j] for j in range(d_prev))
                    for i in range(m)
                )
                for col in kc
            ]
            new_rows = []
            for coeffs, rhs in rows:
                shifted = rhs - la.dot(coeffs, z0)
                newc = tuple(la.dot(coeffs, col) for col in kc)
                if not any(newc):
                    if shifted < 0:
                        raise _EmptyPolytope
                    continue
                new_rows.append(la.normalize_row(newc, shifted))
            rows = new_rows
            eqs = []
        d = len(k_cols)
        if d == 0:
            return [], y0, k_cols
        rows = la.dedupe_rows(rows)
        reduced = la.reduce_rows_boxsafe(rows, d)
        if reduced is None:
            raise _EmptyPolytope
        rows = reduced
        new_eqs, rows = la.extract_equalities(rows)
        if new_eqs:
            eqs = new_eqs
            continue
        if not rows:
            raise UnboundedPolyhedronError("no constraints left; input unbounded")
        verts = la.vertices_of(rows, d)
        if not verts:
            raise _EmptyPolytope
        v0 = verts[0][0]
        if len(verts) == 1:
            if any(x.denominator != 1 for x in v0):
                raise _EmptyPolytope
            eqs = [
                (tuple(1 if i == j else 0 for i in range(d)), int(v0[j]))
                for j in range(d)
            ]
            continue
        diffs = [tuple(v[i] - v0[i] for i in range(d)) for v, _ in verts[1:]]
        if la.rank_int([list(x) for x in diffs]) == d:
            return rows, y0, k_cols
        eqs = []
        for h in la.kernel_basis_fraction([list(x) for x in diffs], d):
            rhs = sum(Fraction(h[i]) * v0[i] for i in range(d))
            h = tuple(x * rhs.denominator for x in h)
            eqs.append((h, int(rhs * rhs.denominator)))
    raise ResourceLimitError("affine-hull reduction did not converge")


def lattice_gf_mapped(
    ineq_rows,
    eq_rows,
    eq_rhs,
    m,
    exp_rows,
    exp_offset,
    out_nvars,
    coeff_factor=1,
    seed=0,
    merge=True,
):
    """Short GF over out-space of sum over {y in Z^m : A y <= b, E y = h} of t^(M y + o).

    The solution set must be bounded.  This is the shared engine behind
    polytope GFs and the Hadamard auxiliary polytopes.
    """
    try:
        rows, y0, k_cols = _reduce_to_fulldim(ineq_rows, eq_rows, eq_rhs, m)
    except _EmptyPolytope:
        return zero_gf(out_nvars)
    offset = tuple(
        o + la.dot(erow, y0) for o, erow in zip(exp_offset, exp_rows)
    )
    d = len(k_cols)
    if d == 0:
        term = GFTerm(Fraction(coeff_factor), offset)
        return canonicalize(ShortGF(out_nvars, (term,)))
    triples, _ = _brion_fulldim(rows, d)
    from .gfcore import term_from_positive

    zgf = ShortGF(
        d,
        tuple(
            term_from_positive(sign, apex, tuple(cols))
            for sign, apex, cols in triples
        ),
    )
    vrows = [
        tuple(la.dot(erow, k_cols[j]) for j in range(d)) for erow in exp_rows
    ]
    return substitute(
        zgf,
        vrows,
        out_nvars,
        shift=offset,
        coeff_factor=coeff_factor,
        allow_collapse=True,
        seed=seed,
        merge=merge,
    )


def lattice_points_of(ineq_rows, eq_rows, eq_rhs, m, limit=None):
    """Integer points of a bounded {y : A y <= b, E y = h}, via the reduction."""
    try:
        rows, y0, k_cols = _reduce_to_fulldim(ineq_rows, eq_rows, eq_rhs, m)
    except _EmptyPolytope:
        return []
    d = len(k_cols)
    if d == 0:
        return [tuple(y0)]
    bounds = la.propagate_bounds(rows, [[None, None]] * d, rounds=8)
    if bounds is None:
        return []
    if any(lo is None or hi is None for lo, hi in bounds):
        raise UnboundedPolyhedronError("could not derive finite bounds")
    pts = la.lattice_points(rows, bounds, limit=limit)
    out = [
        tuple(y0[i] + sum(k_cols[j][i] * z[j] for j in range(d)) for i in range(m))
        for z in pts
    ]
    return sorted(out)


# ---------------------------------------------------------------------------
# public operations


def vertex_cones(polyhedron):
    """Vertices with their tangent cones, by exhaustive basic solutions."""
    rows = polyhedron.scaled_int_rows()
    n = polyhedron.n
    if not rows:
        raise UnboundedPolyhedronError("empty constraint system is unbounded")
    if la.rank_int([r[0] for r in rows]) < n or la.recession_is_nontrivial(rows, n):
        raise UnboundedPolyhedronError("unbounded polyhedra are unsupported")
    out = []
    for vertex, tight in la.vertices_of(rows, n):
        normals = [rows[i][0] for i in tight]
        rays = []
        seen = set()
        if n == 1:
            for nrm in normals:
                ray = (-1,) if nrm[0] > 0 else (1,)
                if ray not in seen:
                    seen.add(ray)
                    rays.append(ray)
        else:
            for combo in combinations(range(len(normals)), n - 1):
                sub = [normals[i] for i in combo]
                if la.rank_int([list(s) for s in sub]) != n - 1:
                    continue
                dvec = la.kernel_vector(sub, n)
                if dvec is None:
                    continue
                for cand in (dvec, tuple(-x for x in dvec)):
                    if all(la.dot(nrm, cand) <= 0 for nrm in normals):
                        if cand not in seen:
                            seen.add(cand)
                            rays.append(cand)
        rays.sort()
        out.append((vertex, tuple(rays)))
    return out


def sign_decompose(cone):
    """Exact signed unimodular decomposition of a simplicial cone.

    The signed indicator sum of the output equals the input's indicator
    exactly (lower-dimensional intersection cones are kept with alternating
    signs, unlike the mod-lower-dimensional variant used inside polytope GFs).
    """
    n = len(cone.apex)
    out = []
    stack = [(cone.sign, tuple(cone.generators))]
    guard = 0
    while stack:
        guard += 1
        if guard > 100_000:
            raise ResourceLimitError("sign decomposition did not converge")
        s, gens = stack.pop()
        k = len(gens)
        if k == 0:
            out.append(SignedCone(cone.apex, (), s))
            continue
        idx = cone_index(gens, n)
        if idx == 0:
            raise ValueError("generators not independent")
        if idx == 1:
            out.append(SignedCone(cone.apex, gens, s))
            continue
        found = _subcone_parallelepiped_point(gens, n)
        if found is None:
            raise ResourceLimitError("no parallelepiped point found")
        w, lam = found
        support = [i for i in range(k) if lam[i] > 0]
        # exact stellar inclusion-exclusion over the covering subcones
        for size in range(1, len(support) + 1):
            for subset in combinations(support, size):
                piece = tuple(
                    gens[i] for i in range(k) if i not in subset
                ) + (w,)
                sign = s if size % 2 == 1 else -s
                stack.append((sign, piece))
    return out


def _subcone_parallelepiped_point(gens, n):
    """Nonzero lattice point of {sum lam_i g_i : lam in [0,1)^k} for independent g_i."""
    k = len(gens)
    lo = [0] * n
    hi = [0] * n
    for i in range(n):
        for g in gens:
            if g[i] > 0:
                hi[i] += g[i]
            else:
                lo[i] += g[i]
    # solve lam from k independent coordinate rows
    rows_idx = []
    for i in range(n):
        trial = rows_idx + [i]
        sub = [[g[r] for g in gens] for r in trial]
        if la.rank_int(sub) == len(trial):
            rows_idx.append(i)
        if len(rows_idx) == k:
            break
    mat = [[g[r] for g in gens] for r in rows_idx]
    best = None
    total = 1
    for i in range(n):
        total *= hi[i] - lo[i] + 1
        if total > 500_000:
            raise ResourceLimitError("parallelepiped search box too large")

    def rec(i, point):
        nonlocal best
        if i == n:
            if not any(point):
                return
            lam = la.solve_square(mat, [point[r] for r in rows_idx])
            if lam is None:
                return
            if any(x < 0 or x >= 1 for x in lam):
                return
            # verify point lies in the span
            for c in range(n):
                if sum(lam[j] * gens[j][c] for j in range(k)) != point[c]:
                    return
            key = (max(lam), tuple(point))
            if best is None or key < best[0]:
                best = (key, tuple(point), lam)
            return
        for v in range(lo[i], hi[i] + 1):
            rec(i + 1, point + [v])

    rec(0, [])
    if best is None:
        return None
    return best[1], best[2]


def cone_gf(cone):
    """Short GF of a shifted unimodular full-dimensional cone."""
    n = len(cone.apex)
    if len(cone.generators) != n:
        raise ValueError("cone_gf requires a full-dimensional simplicial cone")
    if cone_index(cone.generators, n) != 1:
        raise ValueError("cone_gf requires a unimodular cone")
    sign, apex, cols = _unimodular_cone_term(
        cone.apex, [tuple(g) for g in cone.generators], cone.sign, n
    )
    from .gfcore import term_from_positive

    return canonicalize(
        ShortGF(n, (term_from_positive(sign, apex, cols),))
    )


def polytope_gf(polyhedron, check_bounded=True, merge=True, seed=0):
    """Short GF of the polytope's lattice points via signed cone decomposition."""
    n = polyhedron.n
    rows = polyhedron.scaled_int_rows()
    if check_bounded:
        if not rows or la.rank_int([r[0] for r in rows]) < n or la.recession_is_nontrivial(rows, n):
            raise UnboundedPolyhedronError("unbounded polyhedra are unsupported")
    lrows = polyhedron.lattice_rows()
    if lrows is None:
        return zero_gf(n)
    ident = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return lattice_gf_mapped(
        lrows, [], [], n, ident, tuple(0 for _ in range(n)), n, seed=seed, merge=merge
    )


def enumerate_polytope_points(polyhedron, limit=None):
    """Brute-force lattice points; the independent oracle for counting tests."""
    lrows = polyhedron.lattice_rows()
    if lrows is None:
        return []
    return lattice_points_of(lrows, [], [], polyhedron.n, limit=limit)


def semigroup_gf(b):
    """1 / prod_j (1 - t^(b_j)): the numerical-semigroup short power series."""
    bs = tuple(int(x) for x in b)
    if any(x < 1 for x in bs):
        raise ValueError("semigroup generators must be positive")
    term = GFTerm(Fraction(1), (0,), tuple((x,) for x in bs))
    return canonicalize(ShortGF(1, (term,)))


# ---------------------------------------------------------------------------
# text format


def format_polyhedron(p):
    lines = [f"poly n={p.n}"]
    for row, rhs in zip(p.A, p.b):
        cells = " ".join(f"{c.numerator}/{c.denominator}" for c in row)
        lines.append(f"{cells} <= {rhs.numerator}/{rhs.denominator}")
    return "\n".join(lines) + "\n"


def parse_polyhedron(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("poly "):
        raise FormatError("missing 'poly' header")
    try:
        n = int(dict(p.split("=", 1) for p in lines[0].split()[1:])["n"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header: {lines[0]!r}") from exc
    rows = []
    rhs = []
    for ln in lines[1:]:
        if "<=" not in ln:
            raise FormatError(f"bad row: {ln!r}")
        left, right = ln.split("<=")
        try:
            coeffs = [Fraction(tok) for tok in left.split()]
            bound = Fraction(right.strip())
        except ValueError as exc:
            raise FormatError(f"bad row: {ln!r}") from exc
        if len(coeffs) != n:
            raise FormatError(f"row arity != {n}: {ln!r}")
        rows.append(tuple(coeffs))
        rhs.append(bound)
    return Polyhedron(tuple(rows), tuple(rhs), n)

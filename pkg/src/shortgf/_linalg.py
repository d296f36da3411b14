"""Exact integer/rational linear algebra helpers.

Everything here is fraction-free or `fractions.Fraction` based; no floating
point.  Rows of inequality systems are (coeffs, rhs) pairs of ints meaning
coeffs . x <= rhs.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import ResourceLimitError


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero vector unchanged)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def mat_vec(rows, v):
    return tuple(dot(r, v) for r in rows)


def mat_mul(a_rows, b_rows):
    """Product of two matrices given as row lists."""
    bt = list(zip(*b_rows))
    return tuple(tuple(dot(r, c) for c in bt) for r in a_rows)


def transpose(rows):
    return tuple(zip(*rows))


def det_int(rows):
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    w = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if w[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            w[k], w[piv] = w[piv], w[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) // prev
            w[i][k] = 0
        prev = w[k][k]
    return sign * w[n - 1][n - 1]


def solve_square(rows, rhs):
    """Solve an n x n integer (or Fraction) system exactly.

    Returns a tuple of Fractions, or None when the matrix is singular.
    """
    n = len(rows)
    w = [[Fraction(x) for x in r] + [Fraction(rhs[i])] for i, r in enumerate(rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if w[i][k] != 0), None)
        if piv is None:
            return None
        if piv != k:
            w[k], w[piv] = w[piv], w[k]
        inv = 1 / w[k][k]
        w[k] = [x * inv for x in w[k]]
        for i in range(n):
            if i != k and w[i][k]:
                f = w[i][k]
                w[i] = [x - f * y for x, y in zip(w[i], w[k])]
    return tuple(w[i][n] for i in range(n))


def rank_int(rows):
    """Rank of a matrix with integer or Fraction entries."""
    if not rows:
        return 0
    w = [[Fraction(x) for x in r] for r in rows]
    m, n = len(w), len(w[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if w[i][c] != 0), None)
        if piv is None:
            continue
        w[r], w[piv] = w[piv], w[r]
        inv = 1 / w[r][c]
        w[r] = [x * inv for x in w[r]]
        for i in range(m):
            if i != r and w[i][c]:
                f = w[i][c]
                w[i] = [x - f * y for x, y in zip(w[i], w[r])]
        r += 1
        if r == m:
            break
    return r


def kernel_basis_fraction(rows, n):
    """Integer basis of {h in Q^n : rows . h = 0} via reduced row echelon form."""
    w = [[Fraction(x) for x in r] for r in rows]
    m = len(w)
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if w[i][c] != 0), None)
        if piv is None:
            continue
        w[r], w[piv] = w[piv], w[r]
        inv = 1 / w[r][c]
        w[r] = [x * inv for x in w[r]]
        for i in range(m):
            if i != r and w[i][c]:
                f = w[i][c]
                w[i] = [x - f * y for x, y in zip(w[i], w[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -w[ri][fc]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        basis.append(primitive(tuple(int(x * denom) for x in v)))
    return basis


def kernel_vector(rows, n):
    """Integer kernel vector of an (n-1) x n integer matrix of rank n-1.

    Computed from signed maximal minors; returns the primitive vector, or None
    when the rows are dependent.
    """
    v = []
    idx = list(range(n))
    for j in range(n):
        cols = idx[:j] + idx[j + 1 :]
        minor = det_int([[r[c] for c in cols] for r in rows])
        v.append(minor if j % 2 == 0 else -minor)
    if all(x == 0 for x in v):
        return None
    return primitive(v)


def hnf_columns(rows, m):
    """Column echelon form of an integer matrix by unimodular column operations.

    rows: r x m integer matrix (list of rows).  Returns (H, U, pivots) with
    A.U = H, U unimodular m x m, and H in lower column-echelon form: pivots is
    a list of (row, col) positions of the staircase.
    """
    h = [list(r) for r in rows]
    r = len(h)
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def col_op(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for mat in (h, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j] = a * x + b * y
                row[k] = c * x + d * y

    pivots = []
    col = 0
    for row_i in range(r):
        if col >= m:
            break
        j = next((j for j in range(col, m) if h[row_i][j] != 0), None)
        if j is None:
            continue
        if j != col:
            col_op(col, j, 0, 1, 1, 0)
        for j in range(col + 1, m):
            while h[row_i][j] != 0:
                a, b = h[row_i][col], h[row_i][j]
                if abs(a) > abs(b):
                    col_op(col, j, 0, 1, 1, 0)
                    continue
                q = b // a
                col_op(j, col, 1, -q, 0, 1)
        pivots.append((row_i, col))
        col += 1
    # sign normalization: make pivot entries positive
    for row_i, c in pivots:
        if h[row_i][c] < 0:
            for mat in (h, u):
                for row in mat:
                    row[c] = -row[c]
    return h, u, pivots


def solve_affine_lattice(eq_rows, eq_rhs, m):
    """Integer solutions of E y = h for y in Z^m.

    Returns (y0, K) with the solution set y0 + K Z^d (K columns a lattice
    basis of the kernel, in column-echelon form), or None when no integer
    solution exists.  For an empty equation list returns (0, identity).
    """
    if not eq_rows:
        y0 = tuple(0 for _ in range(m))
        k_cols = [tuple(1 if i == j else 0 for i in range(m)) for j in range(m)]
        return y0, k_cols
    h, u, pivots = hnf_columns(eq_rows, m)
    # particular solution: solve the staircase h . w = rhs with w supported on pivots
    w = [0] * m
    resid = list(eq_rhs)
    for row_i, col in pivots:
        val = resid[row_i] - sum(h[row_i][c] * w[c] for c in range(col))
        if val % h[row_i][col] != 0:
            return None
        w[col] = val // h[row_i][col]
    y0 = tuple(sum(u[i][c] * w[c] for c in range(m)) for i in range(m))
    for i, row in enumerate(eq_rows):
        if dot(row, y0) != eq_rhs[i]:
            return None
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(m) if c not in pivot_cols]
    k_cols = [tuple(u[i][c] for i in range(m)) for c in free_cols]
    if k_cols:
        # re-echelonize the kernel basis so downstream bound propagation is staircase
        kt = [list(col) for col in k_cols]  # d x m, treat columns-as-rows
        h2, u2, piv2 = hnf_columns([list(r) for r in zip(*kt)], len(k_cols))
        k_cols = [tuple(h2[i][j] for i in range(m)) for j in range(len(k_cols))]
        k_cols = [c for c in k_cols if any(c)]
    return y0, k_cols


def normalize_row(coeffs, rhs):
    """Primitive integer row with floor-tightened rhs (integer-point equivalent)."""
    g = vec_gcd(coeffs)
    if g == 0:
        return None  # constant row; caller decides on feasibility via rhs sign
    if g == 1:
        return tuple(coeffs), rhs
    q, r = divmod(rhs, g)
    return tuple(c // g for c in coeffs), q  # floor division tightens


def dedupe_rows(rows):
    """Keep the tightest rhs per normal direction; detect trivially infeasible pairs."""
    best = {}
    for coeffs, rhs in rows:
        if coeffs in best:
            if rhs < best[coeffs]:
                best[coeffs] = rhs
        else:
            best[coeffs] = rhs
    return [(c, b) for c, b in best.items()]


def extract_equalities(rows):
    """Split opposite-row pairs a.x <= b, -a.x <= -b into equalities a.x = b.

    Returns (eq_list, ineq_list); pairs with -a rhs < -b (empty slab) are kept
    as inequalities so emptiness is discovered downstream.
    """
    by_normal = dict(rows)
    eqs = []
    used = set()
    for coeffs, rhs in rows:
        if coeffs in used:
            continue
        neg = tuple(-c for c in coeffs)
        if neg in by_normal and neg not in used:
            if by_normal[neg] == -rhs:
                eqs.append((coeffs, rhs))
                used.add(coeffs)
                used.add(neg)
    ineqs = [(c, b) for c, b in rows if c not in used]
    return eqs, ineqs


def box_redundant(coeffs, rhs, bounds):
    """True when the row holds over the whole bounding box."""
    total = 0
    for c, (lo, hi) in zip(coeffs, bounds):
        if c > 0:
            total += c * hi
        elif c < 0:
            total += c * lo
    return total <= rhs


def propagate_bounds(rows, bounds, rounds=3):
    """Tighten per-variable integer bounds by interval propagation over the rows.

    bounds: list of [lo, hi] (entries may be None for unknown); returns a new
    list, or None when some variable's range becomes empty.
    """
    bnd = [list(b) for b in bounds]
    for _ in range(rounds):
        changed = False
        for coeffs, rhs in rows:
            support = [j for j, c in enumerate(coeffs) if c != 0]
            for j in support:
                c = coeffs[j]
                rest_min = 0
                ok = True
                for k in support:
                    if k == j:
                        continue
                    ck = coeffs[k]
                    lo, hi = bnd[k]
                    if ck > 0:
                        if lo is None:
                            ok = False
                            break
                        rest_min += ck * lo
                    else:
                        if hi is None:
                            ok = False
                            break
                        rest_min += ck * hi
                if not ok:
                    continue
                limit = rhs - rest_min  # c * xj <= limit over the box
                if c > 0:
                    new_hi = limit // c
                    if bnd[j][1] is None or new_hi < bnd[j][1]:
                        bnd[j][1] = new_hi
                        changed = True
                else:
                    q = limit // c
                    if limit % c != 0:
                        q += 1  # ceil for negative divisor
                    if bnd[j][0] is None or q > bnd[j][0]:
                        bnd[j][0] = q
                        changed = True
        for lo, hi in bnd:
            if lo is not None and hi is not None and lo > hi:
                return None
        if not changed:
            break
    return bnd


def reduce_rows_boxsafe(rows, n):
    """Integer-point-preserving row reduction.

    Tightens per-variable bounds by propagation (valid for every integer
    point), replaces unit rows with those bounds, and drops any other row that
    already holds over the resulting box.  Returns None when the box is
    detected empty, or the original rows when no finite box is derivable.
    """
    bounds = propagate_bounds(rows, [[None, None] for _ in range(n)], rounds=6)
    if bounds is None:
        return None
    if any(lo is None or hi is None for lo, hi in bounds):
        return rows
    out = []
    for j in range(n):
        lo, hi = bounds[j]
        if lo > hi:
            return None
        unit = tuple(1 if i == j else 0 for i in range(n))
        out.append((unit, hi))
        out.append((tuple(-u for u in unit), -lo))
    for coeffs, rhs in rows:
        nz = [c for c in coeffs if c]
        if len(nz) == 1 and abs(nz[0]) == 1:
            continue  # unit rows replaced by the propagated bounds
        if box_redundant(coeffs, rhs, bounds):
            continue
        out.append((coeffs, rhs))
    return dedupe_rows(out)


def lattice_points(rows, bounds, limit=None, first_only=False):
    """Integer points of {x : rows hold, bounds[j][0] <= x_j <= bounds[j][1]}.

    Depth-first with bound narrowing; rows are checked at the depth of their
    last supported variable.  All bounds must be finite.
    """
    n = len(bounds)
    for lo, hi in bounds:
        if lo is None or hi is None:
            raise ValueError("lattice_points requires finite bounds")
    by_depth = [[] for _ in range(n)]
    for coeffs, rhs in rows:
        support = [j for j, c in enumerate(coeffs) if c != 0]
        if not support:
            if rhs < 0:
                return []
            continue
        by_depth[max(support)].append((coeffs, rhs))
    out = []
    point = [0] * n
    counter = [0]

    def rec(depth):
        if depth == n:
            out.append(tuple(point))
            if limit is not None:
                counter[0] += 1
                if counter[0] > limit:
                    raise ResourceLimitError(
                        f"lattice enumeration exceeded {limit} points"
                    )
            return first_only
        lo, hi = bounds[depth]
        # narrow with rows that become single-variable at this depth
        for coeffs, rhs in by_depth[depth]:
            c = coeffs[depth]
            partial = sum(coeffs[j] * point[j] for j in range(depth) if coeffs[j])
            limit_v = rhs - partial
            if c > 0:
                v = limit_v // c
                if v < hi:
                    hi = v
            else:
                q = limit_v // c
                if limit_v % c != 0:
                    q += 1
                if q > lo:
                    lo = q
        v = lo
        while v <= hi:
            point[depth] = v
            if rec(depth + 1):
                return True
            v += 1
        return False

    rec(0)
    return out


def has_lattice_point(rows, bounds):
    pts = lattice_points(rows, bounds, first_only=True)
    return bool(pts)


def _solve_cramer_int(mat, rhs, n):
    """Solve an integer n x n system; returns (nums, den) with den > 0, or None."""
    d = det_int(mat)
    if d == 0:
        return None
    nums = []
    for j in range(n):
        mj = [row[:j] + [rhs[i]] + row[j + 1 :] for i, row in enumerate(mat)]
        nums.append(det_int(mj))
    if d < 0:
        d = -d
        nums = [-x for x in nums]
    g = d
    for x in nums:
        g = gcd(g, abs(x))
    if g > 1:
        d //= g
        nums = [x // g for x in nums]
    return nums, d


def vertices_of(rows, n, max_subsets=2_000_000):
    """Vertices of {x : rows hold} by exhaustive basic feasible solutions.

    Rows are integer (coeffs, rhs) pairs; returns (vertex as Fractions,
    tight row indices), sorted for determinism.  All arithmetic is integer
    until the final conversion.
    """
    m = len(rows)
    if m < n:
        return []
    total = 1
    for i in range(n):
        total = total * (m - i) // (i + 1)
    if total > max_subsets:
        raise ResourceLimitError(
            f"vertex enumeration over {total} constraint subsets exceeds cap"
        )
    coeff_rows = [list(r[0]) for r in rows]
    rhs_vals = [r[1] for r in rows]
    seen = {}
    for subset in combinations(range(m), n):
        mat = [coeff_rows[i] for i in subset]
        rhs = [rhs_vals[i] for i in subset]
        sol = _solve_cramer_int(mat, rhs, n)
        if sol is None:
            continue
        nums, den = sol
        key = (tuple(nums), den)
        if key in seen:
            continue
        feasible = True
        for coeffs, rhs_ in rows:
            if sum(c * x for c, x in zip(coeffs, nums)) > rhs_ * den:
                feasible = False
                break
        if feasible:
            seen[key] = None
    out = []
    for nums, den in seen:
        tight = tuple(
            i
            for i, (coeffs, rhs_) in enumerate(rows)
            if sum(c * x for c, x in zip(coeffs, nums)) == rhs_ * den
        )
        out.append((tuple(Fraction(x, den) for x in nums), tight))
    out.sort(key=lambda t: t[0])
    return out


def recession_is_nontrivial(rows, n):
    """True when {x : A x <= 0} contains a nonzero direction."""
    mat = [r[0] for r in rows]
    if rank_int(mat) < n:
        return True
    for subset in combinations(range(len(rows)), n - 1):
        sub = [mat[i] for i in subset]
        if rank_int(sub) < n - 1:
            continue
        d = kernel_vector(sub, n)
        if d is None:
            continue
        if all(dot(r, d) <= 0 for r in mat):
            return True
        nd = tuple(-x for x in d)
        if all(dot(r, nd) <= 0 for r in mat):
            return True
    return False


def matrix_inverse_fraction(rows):
    """Exact inverse of a square integer matrix as rows of Fractions."""
    n = len(rows)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        sol = solve_square(rows, e)
        if sol is None:
            return None
        cols.append(sol)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def enumerate_parallelepiped(gen_cols, max_points=200_000):
    """Integer points of {sum_i lam_i g_i : lam in [0,1)^d} for a full-rank basis.

    gen_cols: list of d integer d-vectors (the generators, as columns).
    Returns a list of (point, lam) pairs; includes the origin.
    """
    d = len(gen_cols)
    w_rows = tuple(tuple(gen_cols[j][i] for j in range(d)) for i in range(d))
    det = abs(det_int(w_rows))
    if det == 0:
        raise ValueError("generators not full rank")
    if det > max_points:
        raise ResourceLimitError(f"parallelepiped has {det} lattice classes")
    w_inv = matrix_inverse_fraction(w_rows)
    h, _, pivots = hnf_columns([list(r) for r in w_rows], d)
    diag = [1] * d
    for ri, ci in pivots:
        diag[ri] = h[ri][ci]
    pts = []

    def visit(rep):
        lam = mat_vec(w_inv, rep)
        frac = tuple(x - (x.numerator // x.denominator) for x in lam)
        pt = tuple(
            rep[i] - sum(gen_cols[j][i] * (lam[j].numerator // lam[j].denominator) for j in range(d))
            for i in range(d)
        )
        pts.append((pt, frac))

    rep = [0] * d

    def rec(i):
        if i == d:
            visit(tuple(rep))
            return
        for v in range(diag[i]):
            rep[i] = v
            rec(i + 1)
        rep[i] = 0

    rec(0)
    # dedupe (reps map bijectively, but keep safety) and sort for determinism
    uniq = {}
    for pt, frac in pts:
        uniq[pt] = frac
    return sorted(uniq.items())


def lll_reduce(basis, delta=Fraction(3, 4)):
    """Textbook LLL over the rationals; basis is a list of integer row vectors."""
    b = [list(r) for r in basis]
    n = len(b)

    def gram(b):
        bstar = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                denom = dot(bstar[j], bstar[j])
                mu[i][j] = dot([Fraction(x) for x in b[i]], bstar[j]) / denom
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gram(b)
    k = 1
    guard = 0
    while k < n:
        guard += 1
        if guard > 10_000:
            break
        for j in range(k - 1, -1, -1):
            q = mu[k][j] + Fraction(1, 2)
            r = q.numerator // q.denominator  # nearest integer to mu[k][j]
            if r != 0:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                bstar, mu = gram(b)
        lhs = dot(bstar[k], bstar[k])
        rhs = (delta - mu[k][k - 1] ** 2) * dot(bstar[k - 1], bstar[k - 1])
        if lhs >= rhs:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bstar, mu = gram(b)
            k = max(k - 1, 1)
    return [tuple(r) for r in b]

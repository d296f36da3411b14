"""Monomial substitution on short GFs, including exact limits.

The exponent map x -> V x (+ shift) sends a term c t^a / prod(1 - t^b) to
c u^(Va) / prod(1 - u^(Vb)).  When some V b = 0 the substituted factor is
singular; for finite-support inputs the total is still a Laurent polynomial,
and the correct value is the eps^0 coefficient after perturbing the
substitution by t_j <- u^(V e_j) * exp(eps * lam_j) with a generic integer
lam.  Collapsed factors contribute rational Laurent series in eps; surviving
factors contribute series whose coefficients are m-th moment sums

    sum_{m>=0} m^i w^m = A_i(w) / (1-w)^(i+1),    w = u^(Vb),

with A_i the classical Eulerian-style moment polynomials.  Expanding those
numerators monomial by monomial yields short GF terms again, with index at
most the original term's denominator count.
"""

from fractions import Fraction
import random

from ._series import EpsSeries, eulerian_polynomials
from .errors import DegenerateDirectionError, ZeroImageError
from .gfcore import (
    GFTerm,
    ShortGF,
    canonicalize,
    direction_for,
    is_canonical,
    normalized,
    term_from_positive,
    term_positive_form,
)


def _draw_lambda(nvars, constraints, seed):
    """Integer vector with nonzero pairing against every constraint vector."""
    rng = random.Random(seed)
    for _ in range(200):
        lam = tuple(rng.randint(1, 997) * (1 if rng.random() < 0.5 else -1) for _ in range(nvars))
        if all(sum(l * v for l, v in zip(lam, vec)) != 0 for vec in constraints):
            return lam
    raise DegenerateDirectionError("no generic perturbation vector found")


def _map_vec(vrows, vec):
    return tuple(sum(r[j] * vec[j] for j in range(len(vec))) for r in vrows)


def substitute(
    f,
    vrows,
    out_nvars,
    shift=None,
    coeff_factor=1,
    allow_collapse=False,
    seed=0,
    merge=False,
):
    """Apply the exponent map x -> V x + shift to a short GF.

    vrows: out_nvars rows of length f.nvars.  With allow_collapse=False a
    denominator image of zero raises ZeroImageError; with True the input must
    have finite support and the exact limit is taken.
    """
    if shift is None:
        shift = tuple(0 for _ in range(out_nvars))
    coeff_factor = Fraction(coeff_factor)
    g = f if is_canonical(f) else canonicalize(f)

    collapsed_vecs = []
    per_term = []
    for ti, term in enumerate(g.terms):
        c, apex, vecs = term_positive_form(term)
        images = tuple(_map_vec(vrows, v) for v in vecs)
        dead = [j for j, im in enumerate(images) if not any(im)]
        if dead and not allow_collapse:
            raise ZeroImageError(ti, term.denoms[dead[0]])
        per_term.append((c, apex, vecs, images, dead))
        collapsed_vecs.extend(vecs[j] for j in dead)

    lam = _draw_lambda(f.nvars, collapsed_vecs, seed) if collapsed_vecs else None
    max_d = max((len(dead) for _, _, _, _, dead in per_term), default=0)
    eulerian = eulerian_polynomials(max_d) if max_d else None

    out_terms = []
    for c, apex, vecs, images, dead in per_term:
        if c == 0:
            continue
        base_shift = tuple(
            s + x for s, x in zip(shift, _map_vec(vrows, apex))
        )
        if not dead:
            out_terms.append(
                term_from_positive(c * coeff_factor, base_shift, images)
            )
            continue
        d = len(dead)
        alive = [j for j in range(len(vecs)) if j not in dead]
        # rational series: exp factor times one -1/(eps*nu) * 1/E per dead factor
        series = EpsSeries.exp_linear(sum(l * a for l, a in zip(lam, apex)), d)
        lead = Fraction(1)
        for j in dead:
            nu = sum(l * v for l, v in zip(lam, vecs[j]))
            lead *= Fraction(-1, nu)
            series = series * EpsSeries.expm1_over_x(nu, d).inverse()
        nu_alive = [sum(l * v for l, v in zip(lam, vecs[j])) for j in alive]

        def emit(pos, remaining, factor, extra_apex, extra_vecs):
            if pos == len(alive):
                total = factor * series[remaining]
                if total:
                    out_terms.append(
                        term_from_positive(
                            c * coeff_factor * lead * total,
                            tuple(a + e for a, e in zip(base_shift, extra_apex)),
                            tuple(extra_vecs),
                        )
                    )
                return
            j = alive[pos]
            gvec = images[j]
            nu = nu_alive[pos]
            for i in range(remaining + 1):
                if i == 0:
                    weight = Fraction(1)
                elif nu == 0:
                    break
                else:
                    fact = 1
                    for t in range(2, i + 1):
                        fact *= t
                    weight = Fraction(nu**i, fact)
                poly = eulerian[i]
                for k, a_ik in enumerate(poly):
                    if a_ik == 0:
                        continue
                    emit(
                        pos + 1,
                        remaining - i,
                        factor * weight * a_ik,
                        tuple(e + k * gv for e, gv in zip(extra_apex, gvec)),
                        extra_vecs + [gvec] * (i + 1),
                    )

        emit(0, d, Fraction(1), tuple(0 for _ in range(out_nvars)), [])

    out = ShortGF(out_nvars, tuple(out_terms))
    out = canonicalize(out, direction_for(out_nvars))
    if merge:
        out = normalized(out)
    return out


def evaluate_at_one(f, seed=0):
    """Limit of f(t) as t -> (1,..,1), exact, via t_j <- exp(eps * lam_j).

    For a GF of finite support this is the cardinality of the support; for a
    short power series of finite support it is the sum of all coefficients.
    The caller asserts finite support.
    """
    constraints = [d for t in f.terms for d in t.denoms]
    lam = _draw_lambda(f.nvars, constraints, seed) if constraints else None
    total = Fraction(0)
    for term in f.terms:
        if term.coeff == 0:
            continue
        k = len(term.denoms)
        if k == 0:
            total += term.coeff
            continue
        series = EpsSeries.exp_linear(
            sum(l * a for l, a in zip(lam, term.numer)), k
        )
        lead = Fraction(1)
        for b in term.denoms:
            nu = sum(l * v for l, v in zip(lam, b))
            lead *= Fraction(-1, nu)
            series = series * EpsSeries.expm1_over_x(nu, k).inverse()
        total += term.coeff * lead * series[k]
    return total

"""Core data model: canonical flips, the expansion oracle, lengths, formats."""

import random
from fractions import Fraction

import pytest

from shortgf import (
    ExpansionDirection,
    FormatError,
    GFTerm,
    LatticeBox,
    NonCanonicalError,
    ShortGF,
    canonicalize,
    concat,
    direction_for,
    format_gf,
    from_point_set,
    gf_index,
    gf_length,
    is_canonical,
    normalized,
    oracle_expand,
    parse_gf,
)


def expand(f, box):
    g = f if is_canonical(f) else canonicalize(f)
    return oracle_expand(g, LatticeBox(box))


class TestCanonicalize:
    def test_flip_identity_single_factor(self):
        # 1/(1-t) flips to -t^(-1)/(1-t^(-1)) under a positive direction
        f = ShortGF(1, (GFTerm(1, (0,), ((1,),)),))
        g = canonicalize(f)
        (term,) = g.terms
        assert term.coeff == -1
        assert term.numer == (-1,)
        assert term.denoms == ((-1,),)
        tab = oracle_expand(g, LatticeBox((4,)))
        assert tab.support_with_values() == {
            (0,): 1, (1,): 1, (2,): 1, (3,): 1,
        }

    def test_identity_case(self):
        f = ShortGF(1, (GFTerm(-1, (-1,), ((-1,),)),))
        g = canonicalize(f)
        assert g.terms == f.terms

    def test_canonicalize_preserves_oracle_random(self):
        rng = random.Random(3)
        for _ in range(20):
            terms = []
            for _ in range(rng.randint(1, 3)):
                numer = (rng.randint(0, 4), rng.randint(0, 4))
                k = rng.randint(0, 2)
                denoms = []
                while len(denoms) < k:
                    d = (rng.randint(-2, 2), rng.randint(-2, 2))
                    if any(d):
                        denoms.append(d)
                terms.append(GFTerm(rng.choice([1, -1]), numer, tuple(denoms)))
            f = ShortGF(2, tuple(terms))
            g1 = canonicalize(f, direction_for(2, 0))
            g2 = canonicalize(g1, direction_for(2, 0))
            t1 = oracle_expand(g1, LatticeBox((8, 8)))
            t2 = oracle_expand(g2, LatticeBox((8, 8)))
            assert t1.support_with_values() == t2.support_with_values()

    def test_degenerate_direction_reseeds(self):
        # denominator (3, -2) pairs to zero against ell = (2, 3)
        f = ShortGF(2, (GFTerm(1, (0, 0), ((3, -2),)),))
        g = canonicalize(f)
        ell = g.orientation.ell
        assert 3 * ell[0] - 2 * ell[1] != 0


class TestOracleExpand:
    def test_geometric_sum(self):
        f = ShortGF(1, (GFTerm(1, (0,), ((1,),)), GFTerm(-1, (4,), ((1,),))))
        tab = expand(f, (8,))
        assert tab.support_with_values() == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}

    def test_monomial(self):
        tab = expand(ShortGF(1, (GFTerm(1, (3,)),)), (8,))
        assert tab.support_with_values() == {(3,): 1}

    def test_knapsack_coefficient(self):
        f = ShortGF(1, (GFTerm(1, (0,), ((2,), (3,))),))
        tab = expand(f, (10,))
        # independent enumeration of 2a+3b = 7
        count7 = sum(
            1 for a in range(4) for b in range(3) if 2 * a + 3 * b == 7
        )
        assert count7 == 1
        assert tab[(7,)] == count7
        assert tab[(1,)] == 0

    def test_rejects_non_canonical(self):
        f = ShortGF(1, (GFTerm(1, (0,), ((1,),)),))
        with pytest.raises(NonCanonicalError):
            oracle_expand(f, LatticeBox((4,)))


class TestFromPointSet:
    def test_empty(self):
        f = from_point_set([], 1)
        assert f.terms == ()
        assert expand(f, (4,)).support() == set()

    def test_two_points(self):
        f = from_point_set([(3,), (7,)], 1)
        assert expand(f, (8,)).support() == {(3,), (7,)}

    def test_squares_segment(self):
        squares = [(k * k,) for k in range(8) if k * k < 64]
        f = from_point_set(squares, 1)
        assert len(f.terms) == 8
        assert expand(f, (64,)).support() == set(squares)

    def test_round_trip_with_support(self):
        pts = {(1, 2), (0, 0), (3, 1)}
        f = from_point_set(sorted(pts), 2)
        assert expand(f, (4, 4)).support() == pts


class TestLengthAndIndex:
    def test_length_monomial(self):
        assert gf_length(ShortGF(1, (GFTerm(1, (0,)),))) == 1

    def test_length_geometric(self):
        assert gf_length(ShortGF(1, (GFTerm(1, (0,), ((1,),)),))) == 2

    def test_length_doubling_law(self):
        def bits(v):
            return 1 + (v - 1).bit_length() if v else 0

        for p, q in [(1, 1), (3, 2), (5, 1)]:
            base = ShortGF(1, (GFTerm(Fraction(p, q), (0,)),))
            doubled = ShortGF(1, (GFTerm(Fraction(2 * p, q), (0,)),))
            c = Fraction(p, q)
            c2 = Fraction(2 * p, q)
            want = bits(abs(c2.numerator * c2.denominator)) - bits(
                abs(c.numerator * c.denominator)
            )
            assert gf_length(doubled) - gf_length(base) == want

    def test_index(self):
        poly = from_point_set([(3,), (7,)], 1)
        assert gf_index(poly) == 0
        knap = ShortGF(1, (GFTerm(1, (0,), ((1,), (2,))),))
        assert gf_index(knap) == 2
        assert gf_index(concat(poly, knap)) == 2

    def test_index_of_concat_is_max(self):
        a = ShortGF(1, (GFTerm(1, (0,), ((1,),)),))
        b = from_point_set([(1,)], 1)
        assert gf_index(concat(a, b)) == max(gf_index(a), gf_index(b))


class TestNormalized:
    def test_merges_identical_terms(self):
        f = ShortGF(1, (GFTerm(1, (2,)), GFTerm(2, (2,)), GFTerm(-3, (2,))))
        assert normalized(f).terms == ()

    def test_oracle_unchanged(self):
        f = ShortGF(
            1,
            (
                GFTerm(1, (0,), ((1,),)),
                GFTerm(1, (0,), ((1,),)),
                GFTerm(-1, (5,), ((1,),)),
            ),
        )
        g = normalized(canonicalize(f))
        assert (
            expand(f, (8,)).support_with_values()
            == expand(g, (8,)).support_with_values()
        )


class TestFormat:
    def test_round_trip_bit_exact(self):
        f = ShortGF(
            2,
            (
                GFTerm(Fraction(-3, 7), (1, -2), ((1, 0), (0, -4))),
                GFTerm(1, (0, 0)),
            ),
            index_bound=3,
        )
        text = format_gf(f)
        g = parse_gf(text)
        assert g.nvars == f.nvars
        assert g.index_bound == f.index_bound
        assert g.terms == f.terms
        assert format_gf(g) == text

    def test_header_errors(self):
        with pytest.raises(FormatError):
            parse_gf("nope\n")
        with pytest.raises(FormatError):
            parse_gf("gf nvars=2 index=1\nterm c=1/1 a=1 b=\n")

    def test_empty_denominator_field(self):
        f = parse_gf("gf nvars=1 index=0\nterm c=1/1 a=5 b=\n")
        assert f.terms[0].denoms == ()


class TestOracleSoundness:
    def test_constructors_give_zero_one(self):
        rng = random.Random(11)
        for _ in range(10):
            pts = {
                (rng.randrange(6), rng.randrange(6)) for _ in range(rng.randint(0, 8))
            }
            f = from_point_set(sorted(pts), 2)
            assert expand(f, (6, 6)).is_zero_one()

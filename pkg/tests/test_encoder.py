"""Circuit encodings: Tseitin CNF, bit systems, segment and gadget pipelines."""

import random
from itertools import product

import pytest

from shortgf import (
    FormatError,
    LatticeBox,
    PAFormula,
    and_gate,
    bit_atoms,
    circuit_to_3cnf,
    cnf_to_pa,
    compress_encoding,
    constant_false,
    count_certificates,
    encode_alternating,
    encode_segment,
    eval_formula,
    evaluate_at_one,
    even_detector,
    format_circuit,
    format_encoding,
    formula_length,
    from_point_set,
    minkowski_gadget,
    parse_circuit,
    parse_encoding,
    parity3,
    segment_gf,
    square_tester,
    support_points,
    violation_projection_by_bits,
    xor_detector,
)
from shortgf.encoder import _literal_value, segment_gf as _segment_gf


def cnf_truth(cnf, x, y):
    return cnf.satisfied(x, y)


class TestCircuits:
    def test_parse_format_round_trip(self):
        text = "circuit r=3\ng1 = NOT x1\ng2 = AND g1 x2\nout g2\n"
        c = parse_circuit(text)
        assert format_circuit(c) == text
        assert c.truth_table() == [2, 6]  # x1 = 0, x2 = 1

    def test_reference_before_definition(self):
        with pytest.raises(FormatError):
            parse_circuit("circuit r=2\ng1 = AND g2 x1\nout g1\n")

    def test_gate_values_are_functions_of_input(self):
        c = parity3()
        for x in range(8):
            out1, y1 = c.gate_values(x)
            out2, y2 = c.gate_values(x)
            assert (out1, y1) == (out2, y2)


class TestCircuitTo3CNF:
    def test_not_gate_satisfying_pairs(self):
        c = even_detector(1)
        cnf = circuit_to_3cnf(c)
        sats = [
            (x, y)
            for x in range(2)
            for y in range(2)
            if cnf.satisfied(x, y)
        ]
        # gate bit equals NOT x1, and the output clause keeps only accepted x
        assert sats == [(0, 1)]

    def test_and_accepted_set(self):
        c = and_gate(2, 1, 2)
        cnf = circuit_to_3cnf(c)
        accepted = {
            x
            for x in range(4)
            if any(cnf.satisfied(x, y) for y in range(1 << cnf.p))
        }
        assert accepted == {3}

    def test_parity_truth_table(self):
        c = parity3()
        cnf = circuit_to_3cnf(c)
        got = {
            x
            for x in range(8)
            if any(cnf.satisfied(x, y) for y in range(1 << cnf.p))
        }
        assert got == set(c.truth_table())

    def test_witness_unique(self):
        c = xor_detector(3)
        cnf = circuit_to_3cnf(c)
        for x in range(8):
            ys = [y for y in range(1 << cnf.p) if cnf.satisfied(x, y)]
            assert len(ys) <= 1
            if ys:
                assert c.accepts(x)


class TestBitAtoms:
    def test_bit_semantics_exhaustive(self):
        for i, x in product(range(1, 5), range(16)):
            want = (x >> (i - 1)) & 1
            for polarity in (True, False):
                atoms = bit_atoms(i, polarity, "x", "z")
                holds = any(
                    all(a.evaluate({"x": x, "z": z}) for a in atoms)
                    for z in range(16)
                )
                assert holds == (bool(want) == polarity)

    def test_example_bit_two_of_five(self):
        pos = bit_atoms(2, True, "x", "z")
        neg = bit_atoms(2, False, "x", "z")
        assert not any(
            all(a.evaluate({"x": 5, "z": z}) for a in pos) for z in range(8)
        )
        assert any(
            all(a.evaluate({"x": 5, "z": z}) for a in neg) for z in range(8)
        )
        # the witness for the negative-polarity atom is z = 1
        assert all(a.evaluate({"x": 5, "z": 1}) for a in neg)

    def test_low_bit_of_five(self):
        pos = bit_atoms(1, True, "x", "z")
        assert any(
            all(a.evaluate({"x": 5, "z": z}) for a in pos) for z in range(8)
        )


class TestCnfToPA:
    def test_empty_cnf_is_all_true(self):
        from shortgf.encoder import CNF3

        cnf = CNF3(2, 0, ())
        formula, violation, q = cnf_to_pa(cnf)
        assert violation is None
        for x in range(4):
            assert eval_formula(formula, (x,))

    def test_not_gate_truth_set(self):
        c = even_detector(2)
        cnf = circuit_to_3cnf(c)
        formula, violation, q = cnf_to_pa(cnf)
        got = {x for x in range(4) if eval_formula(formula, (x,))}
        assert got == {0, 2}

    def test_length_grows_linearly_in_clauses(self):
        lengths = []
        for r in (2, 3):
            for circ in (even_detector(r), and_gate(r, 1, r)):
                cnf = circuit_to_3cnf(circ)
                formula, _, _ = cnf_to_pa(cnf)
                lengths.append((len(cnf.clauses), formula_length(formula)))
        # more clauses never shrink the formula
        lengths.sort()
        for (c1, l1), (c2, l2) in zip(lengths, lengths[1:]):
            if c1 < c2:
                assert l1 < l2


class TestEncodeSegment:
    def test_even_detector(self):
        enc = encode_segment(even_detector(3))
        seg = segment_gf(enc)
        assert {p[0] for p in support_points(seg, (8,))} == {0, 2, 4, 6}

    def test_constant_false_is_empty(self):
        enc = encode_segment(constant_false(3))
        seg = segment_gf(enc)
        assert support_points(seg, (8,)) == set()

    def test_square_tester(self):
        enc = encode_segment(square_tester(3))
        seg = segment_gf(enc)
        assert {p[0] for p in support_points(seg, (8,))} == {0, 1, 4}

    def test_piece_union_matches_bit_oracle(self):
        enc = encode_segment(xor_detector(3))
        assert enc.proj_points() == violation_projection_by_bits(
            enc.cnf, enc.box
        )

    def test_region_count_matches_cells(self):
        enc = encode_segment(even_detector(3))
        total = sum(len(pts) for pts in enc.cell_points)
        assert evaluate_at_one(enc.fr) == total

    def test_encoding_format_round_trip(self):
        enc = encode_segment(even_detector(3))
        text = format_encoding(enc)
        back = parse_encoding(text)
        assert back.r == enc.r and back.p == enc.p and back.q == enc.q
        assert back.fr.terms == enc.fr.terms
        assert [p.terms for p in back.pieces] == [p.terms for p in enc.pieces]
        seg = segment_gf(back)
        assert {p[0] for p in support_points(seg, (8,))} == {0, 2, 4, 6}


class TestCompressEncoding:
    def test_even_detector_packed(self):
        enc = encode_segment(even_detector(3))
        packed = compress_encoding(enc)
        assert packed.zdims == 1
        assert evaluate_at_one(packed.fr) == evaluate_at_one(enc.fr)
        seg = segment_gf(packed)
        assert {p[0] for p in support_points(seg, (8,))} == {0, 2, 4, 6}

    def test_projections_unchanged(self):
        enc = encode_segment(xor_detector(3))
        packed = compress_encoding(enc)
        assert packed.proj_points() == enc.proj_points()


class TestAlternating:
    def test_exists_prefix_matches_direct(self):
        # accepted: exists a certificate bit c with (x1 AND c) true
        circ = and_gate(3, 1, 3)  # input bits: x1, x2 | certificate bit
        (formula, violation, merged, q), accepted = encode_alternating(
            circ, "E", cert_bits=1
        )
        want = tuple(
            x
            for x in range(4)
            if any(and_gate(3, 1, 3).accepts(x | (c << 2)) for c in range(2))
        )
        assert accepted == want

    def test_forall_prefix_is_complement(self):
        circ = and_gate(3, 1, 3)
        _, exists_set = encode_alternating(circ, "E", cert_bits=1)
        # forall over the negated acceptance is the complement language
        _, forall_set = encode_alternating(circ, "A", cert_bits=1)
        universe = set(range(4))
        assert set(forall_set) == {
            x
            for x in universe
            if all(circ.accepts(x | (c << 2)) for c in range(2))
        }

    def test_empty_prefix_degenerates_to_segment(self):
        _, accepted = encode_alternating(even_detector(3), "")
        assert accepted == (0, 2, 4, 6)


class TestCountCertificates:
    def test_diagonal(self):
        r = 2
        step = 1 << r
        diag = from_point_set([(x + step * x,) for x in range(step)], 1)
        for x in range(step):
            assert count_certificates(diag, x, r) == 1

    def test_full(self):
        r = 2
        step = 1 << r
        full = from_point_set(
            [(x + step * c,) for x in range(step) for c in range(step)], 1
        )
        for x in range(step):
            assert count_certificates(full, x, r) == step

    def test_random_tables(self):
        rng = random.Random(61)
        r = 3
        step = 1 << r
        table = {
            (x, c): rng.random() < 0.5
            for x in range(step)
            for c in range(step)
        }
        gf = from_point_set(
            [(x + step * c,) for (x, c), ok in table.items() if ok], 1
        )
        for x in range(step):
            want = sum(1 for c in range(step) if table[(x, c)])
            assert count_certificates(gf, x, r) == want


class TestMinkowskiGadget:
    def test_two_singletons(self):
        pieces = [from_point_set([(1,)], 1), from_point_set([(2,)], 1)]
        gadget = minkowski_gadget(pieces, 8)
        assert gadget.slice_points == (1, 2)
        assert gadget.ok

    def test_single_piece(self):
        piece = from_point_set([(3,), (5,)], 1)
        gadget = minkowski_gadget([piece], 8)
        assert gadget.slice_points == (3, 5)
        assert gadget.ok

    def test_three_random_pieces(self):
        rng = random.Random(67)
        pieces = [
            from_point_set(
                sorted({(rng.randrange(8),) for _ in range(rng.randint(1, 4))}),
                1,
            )
            for _ in range(3)
        ]
        gadget = minkowski_gadget(pieces, 8)
        assert gadget.ok

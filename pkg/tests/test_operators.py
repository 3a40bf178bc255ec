"""Tests for PauliSum arithmetic, ladder operators, CAR checks, bilinears."""

import random

import numpy as np
import pytest

from spinchain import (
    DimensionMismatchError,
    PauliString,
    PauliSum,
    annihilation_operator,
    bilinear,
    creation_operator,
    majorana,
    verify_car,
)

from oracles import dense_of_terms, random_word


def random_sum(rng, n, nterms):
    terms = {}
    for _ in range(nterms):
        w = random_word(rng, n)
        terms[w] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return PauliSum(n, terms)


class TestArithmetic:
    def test_add_cancels_to_zero(self):
        x = PauliSum(1, {"X": 1.0})
        assert x + (-1.0) * x == PauliSum.zero(1)
        assert len(x - x) == 0

    def test_raising_lowering_product(self):
        # sigma+ sigma- = |0><0| = (I + Z)/2
        plus = PauliSum(1, {"X": 0.5, "Y": 0.5j})
        minus = plus.dagger()
        assert plus @ minus == PauliSum(1, {"I": 0.5, "Z": 0.5})

    def test_dagger(self):
        plus = PauliSum(1, {"X": 0.5, "Y": 0.5j})
        assert plus.dagger() == PauliSum(1, {"X": 0.5, "Y": -0.5j})

    def test_dagger_is_involution(self):
        rng = random.Random(5)
        for _ in range(30):
            a = random_sum(rng, rng.randint(1, 4), 5)
            assert a.dagger().dagger() == a

    def test_self_commutator_is_zero(self):
        rng = random.Random(9)
        for _ in range(30):
            a = random_sum(rng, rng.randint(1, 4), 5)
            assert a.commutator(a) == PauliSum.zero(a.n)

    def test_product_matches_dense(self):
        rng = random.Random(31)
        for _ in range(40):
            n = rng.randint(1, 4)
            a, b = random_sum(rng, n, 4), random_sum(rng, n, 4)
            got = dense_of_terms(n, (a @ b).items())
            want = dense_of_terms(n, a.items()) @ dense_of_terms(n, b.items())
            assert np.max(np.abs(got - want)) < 1e-12

    def test_scalar_and_matmul_typing(self):
        a = PauliSum(1, {"X": 1.0})
        assert 2 * a == PauliSum(1, {"X": 2.0})
        with pytest.raises(TypeError):
            a * a
        assert a @ PauliString("Y", 1j) == PauliSum(1, {"Z": -1.0})

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            PauliSum(1, {"X": 1.0}) + PauliSum(2, {"XX": 1.0})

    def test_pruning(self):
        a = PauliSum(1, {"X": 1.0, "Y": 1e-15})
        assert a.words() == ["X"]

    def test_is_hermitian_exact(self):
        assert PauliSum(2, {"XY": 0.5, "ZZ": -3.0}).is_hermitian
        assert not PauliSum(2, {"XY": 0.5 + 1e-13j}).is_hermitian

    def test_json_round_trip(self):
        a = PauliSum(2, {"ZX": 0.5, "IY": -0.25j})
        payload = a.to_json_dict()
        assert payload["terms"][0]["word"] == "IY"  # lexicographic order
        assert PauliSum.from_json_dict(payload) == a


class TestLadderOperators:
    def test_single_mode_forms(self):
        assert annihilation_operator(1, 0) == PauliSum(1, {"X": 0.5, "Y": 0.5j})
        assert creation_operator(1, 0) == PauliSum(1, {"X": 0.5, "Y": -0.5j})

    def test_second_mode_carries_z_prefix(self):
        a = annihilation_operator(2, 1)
        assert a == PauliSum(2, {"ZX": 0.5, "ZY": 0.5j})
        # dense check: a is nilpotent and {a, a+} = 1
        m = dense_of_terms(2, a.items())
        assert np.max(np.abs(m @ m)) < 1e-12
        anti = m @ m.conj().T + m.conj().T @ m
        assert np.max(np.abs(anti - np.eye(4))) < 1e-12

    def test_mode_range(self):
        with pytest.raises(ValueError):
            annihilation_operator(2, 2)

    def test_chain_operator_consistency(self):
        # majorana(2k) = a + a+ and majorana(2k+1) = -i (a - a+), exactly
        for n in (1, 2, 3):
            for k in range(n):
                a = annihilation_operator(n, k)
                c = creation_operator(n, k)
                even = PauliSum.from_pauli(majorana(n, 2 * k))
                odd = PauliSum.from_pauli(majorana(n, 2 * k + 1))
                assert a + c == even
                assert -1j * (a - c) == odd


class TestCarVerification:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_relations_hold_exactly(self, n):
        report = verify_car(n)
        assert report.ok
        assert report.max_deviation == 0.0
        assert report.failures == ()

    def test_injected_fault_is_detected(self):
        report = verify_car(2, inject_fault=True)
        assert not report.ok
        assert report.max_deviation > 0.0
        assert len(report.failures) > 0

    def test_report_json(self):
        payload = verify_car(2).to_json_dict()
        assert payload == {"n": 2, "max_deviation": 0.0, "failures": []}


class TestBilinears:
    def test_diagonal_hopping(self):
        # a0 a0+ + a0 a0+ = I + Z
        assert bilinear(1, 0, 0, "hopping") == PauliSum(1, {"I": 1.0, "Z": 1.0})

    def test_hopping_is_hermitian_with_real_coefficients(self):
        h = bilinear(2, 0, 1, "hopping")
        assert h.is_hermitian
        assert all(c.imag == 0.0 for _, c in h.items())

    def test_pairing_supported_on_weight_two_words(self):
        p = bilinear(2, 0, 1, "pairing")
        assert p.is_hermitian
        assert len(p) > 0
        for w, _ in p.items():
            assert sum(1 for ch in w if ch != "I") == 2

    def test_pairing_same_mode_vanishes(self):
        assert bilinear(2, 0, 0, "pairing") == PauliSum.zero(2)

    def test_dense_hermiticity(self):
        for kind in ("hopping", "pairing"):
            b = bilinear(3, 0, 2, kind)
            m = dense_of_terms(3, b.items())
            assert np.max(np.abs(m - m.conj().T)) < 1e-12

    def test_kind_validation(self):
        with pytest.raises(ValueError):
            bilinear(2, 0, 1, "tunneling")

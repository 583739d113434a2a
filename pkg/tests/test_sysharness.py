import json

import numpy as np
import pytest

from ellindep.errors import FieldError, SchemaError, ThresholdError
from ellindep.formchar import canonical_form, same_formal_character, FormalCharacter
from ellindep.nori import MatrixGroup, Thresholds, group_order
from ellindep.sysharness import (
    FIXTURES,
    SystemBundle,
    analyze_group,
    analyze_prime,
    apply_iota,
    char_map,
    check_independence,
    dumps,
    gen_fixture,
    int_char_poly,
    reduce_integral_group,
    verify_compatibility,
)
from ellindep.sysharness.bundle import int_det
from ellindep.sysharness.fixtures import sym_power, weil_res_generators

from oracles import bfs_order

SL2 = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]


def test_reduce_integral_group():
    G = reduce_integral_group(SL2, 7)
    assert G.ell == 7 and np.array_equal(G.generators[0], np.array(SL2[0]))
    with pytest.raises(FieldError):
        reduce_integral_group([[[2, 0], [0, 1]]], 2)
    b = gen_fixture("sym3", [11])
    G3 = b.group(11)
    assert G3.n == 4 and G3.ell == 11


def test_sym_power_is_a_homomorphism():
    A, B = np.array(SL2[0]), np.array(SL2[1])
    for k in (2, 3):
        lhs = np.array(sym_power((A @ B).tolist(), k))
        rhs = np.array(sym_power(A.tolist(), k)) @ np.array(sym_power(B.tolist(), k))
        assert np.array_equal(lhs, rhs)
        assert int_det(sym_power(A.tolist(), k)) == 1
    assert sym_power(SL2[0], 3) == [[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, 1, 3], [0, 0, 0, 1]]


def test_int_char_poly():
    assert int_char_poly([[1, 0], [0, 1]]) == [1, -2, 1]
    assert int_char_poly([[2, 1], [1, 1]]) == [1, -3, 1]
    assert int_char_poly([[0, 0, -6], [1, 0, -11], [0, 1, -6]]) == [1, 6, 11, 6]


def test_char_map():
    assert char_map(np.eye(2, dtype=np.int64), 7) == [5, 1]
    assert char_map(np.array([[2, 0], [0, 3]]), 7) == [(-5) % 7, 6]
    # companion matrix of x^3 + 2x + 5 over GF(11)
    C = np.array([[0, 0, -5], [1, 0, -2], [0, 1, 0]]) % 11
    assert char_map(C, 11) == [0, 2, 5]


def test_apply_iota():
    G = reduce_integral_group(SL2, 7)
    twice = apply_iota(apply_iota(G))
    assert all(np.array_equal(a, b) for a, b in zip(G.generators, twice.generators))
    O = MatrixGroup(2, 7, ([[0, 1], [1, 0]], [[0, 6], [1, 0]]))
    assert all(np.array_equal(a, b) for a, b in zip(O.generators, apply_iota(O).generators))
    a = analyze_group(G)["formal_character"]
    b = analyze_group(apply_iota(G))["formal_character"]
    assert a == b


def test_compatibility_pass_tamper_and_vacuous():
    b = gen_fixture("sl2-std", [7, 11, 13])
    assert b.frobenius_words[0] == {"word": [0], "poly": [1, -2, 1]}
    rep = verify_compatibility(b)
    assert rep["passed"] and not rep["vacuous"] and rep["mismatches"] == []

    obj = b.to_json()
    obj["per_prime_groups"] = {"11": [[[1, 2], [0, 1]], [[1, 0], [1, 1]]]}
    tampered = SystemBundle.from_json(obj)
    tampered.integral_generators = obj["integral_generators"]
    rep = verify_compatibility(tampered)
    assert not rep["passed"]
    assert {m["ell"] for m in rep["mismatches"]} == {11}

    empty = SystemBundle(2, [7, 11], SL2, label="bare")
    rep = verify_compatibility(empty)
    assert rep["passed"] and rep["vacuous"] and rep["warnings"]


def test_compatibility_unknown_generator():
    b = SystemBundle(2, [7], SL2, frobenius_words=[{"word": [5], "poly": [1, -2, 1]}])
    with pytest.raises(SchemaError):
        verify_compatibility(b)


@pytest.mark.parametrize("name", FIXTURES)
def test_every_fixture_is_compatible(name):
    rep = verify_compatibility(gen_fixture(name))
    assert rep["passed"]


def test_weil_res_generators_are_in_sl2_of_the_quadratic_field():
    for p in (7, 11, 13):
        gens = weil_res_generators(p)
        assert all(int_det(g) % p == 1 for g in gens)
    G = gen_fixture("weil-res-sl2", [7]).group(7)
    assert group_order(G) == 49 * (49**2 - 1)


def test_bundle_schema():
    with pytest.raises(SchemaError):
        SystemBundle.from_json({"n": 2})
    with pytest.raises(SchemaError):
        SystemBundle(2, [7, 8], SL2)
    with pytest.raises(SchemaError):
        SystemBundle(2, [7], None)
    with pytest.raises(SchemaError):
        SystemBundle(2, [7], SL2, frobenius_words=[{"word": [0], "poly": [1, 1]}])
    b = gen_fixture("weil-res-sl2", [11, 13])
    assert SystemBundle.from_json(json.loads(json.dumps(b.to_json()))).to_json() == b.to_json()


def test_prime_window_validation():
    b = gen_fixture("sym3", [7, 11])
    with pytest.raises(ThresholdError):
        b.validate_primes()
    b.validate_primes(Thresholds.with_ell_min(7))
    bad = SystemBundle(2, [7, 11], SL2, bad_primes=[11])
    with pytest.raises(ThresholdError):
        bad.validate_primes()


def test_analyze_prime_sl2():
    r = analyze_prime(gen_fixture("sl2-std", [7]), 7)
    assert r["envelope"]["factors"] == [{"type": "A1", "f": 1, "twist": 1}]
    assert r["formal_character"]["basis"] == [[1, 1]]
    assert r["rank_report"]["total_rank"] == 1
    assert r["unipotent_count"] == 48 and r["complete"]
    assert bfs_order(SL2, 7) == 336


def test_analyze_prime_sym2():
    r = analyze_prime(gen_fixture("sym2", [11]), 11)
    fc = FormalCharacter.from_json(r["formal_character"])
    assert same_formal_character(fc, canonical_form([(1, 0, 1), (0, 1, 0)], 3))
    assert r["rank_report"]["total_rank"] == 1 and r["envelope"]["factors"][0]["type"] == "A1"


def test_analyze_torus_only_group():
    b = SystemBundle(2, [11], per_prime_groups={11: [[[2, 0], [0, 6]]]}, label="torus")
    r = analyze_prime(b, 11)
    assert r["unipotent_count"] == 0 and r["envelope"]["dim"] == 0
    assert r["rank_report"]["total_rank"] == 0


def test_analyze_prime_not_in_bundle():
    with pytest.raises(SchemaError):
        analyze_prime(gen_fixture("sl2-std", [7]), 11)


def test_pipeline_errors_are_annotated():
    b = gen_fixture("sym3", [7])
    with pytest.raises(Exception) as info:
        analyze_prime(b, 7)
    assert "ell=7" in str(info.value)


def test_independence_sl2():
    rep = check_independence(gen_fixture("sl2-std", [7, 11, 13, 17, 19, 23]))
    assert rep["verdict"] and rep["fc_constant"]
    assert {r["rank_report"]["total_rank"] for r in rep["per_prime"]} == {1}


def test_independence_sym3():
    rep = check_independence(gen_fixture("sym3", [11, 13, 17, 19]))
    assert rep["verdict"]
    for r in rep["per_prime"]:
        assert sorted(r["weight_matrix"][0]) in ([-3, -1, 1, 3],)


def test_independence_adversarial():
    rep = check_independence(gen_fixture("torus-adversarial", [7, 11, 13, 17]))
    assert not rep["verdict"] and rep["offending_primes"] == [17]
    assert not rep["fc_constant"] and not rep["total_rank_constant"]


def test_independence_needs_two_primes():
    with pytest.raises(SchemaError):
        check_independence(gen_fixture("sl2-std", [7]))


def test_reports_are_deterministic():
    b = gen_fixture("sl2xsl2", [11, 13])
    assert dumps(check_independence(b, seed=4)) == dumps(check_independence(b, seed=4))


def test_unknown_fixture():
    with pytest.raises(SchemaError):
        gen_fixture("nope")


def test_fixture_shapes():
    assert gen_fixture("sl2-std", [7, 11, 13]).primes == [7, 11, 13]
    b = gen_fixture("weil-res-sl2", [7, 11])
    assert b.n == 4 and sorted(b.per_prime_groups) == [7, 11]

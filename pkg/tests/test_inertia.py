import random

import numpy as np
import pytest

from ellindep.errors import NotSemisimpleError, SchemaError
from ellindep.ffcore import ext_field
from ellindep.inertia import (
    TameCharacter,
    TameRep,
    check_serre_bound,
    decompose_tame,
    digits_to_exponent,
    multiplication_rep,
    norm,
    raise_level,
    rep_from_exponents,
    restrict_digits,
    rigidity_check,
    value_on_subfield,
)


def test_restrict_digits_examples():
    assert restrict_digits(7, 2, 7) == (0, 1)
    assert restrict_digits(48, 2, 7) == (0, 0)
    assert restrict_digits(0, 3, 5) == (0, 0, 0)
    assert digits_to_exponent((3, 2), 7) == 17


def test_all_top_digits_normalize_to_zero():
    assert TameCharacter(5, 2, (4, 4)).digits == (0, 0)
    with pytest.raises(SchemaError):
        TameCharacter(5, 2, (5, 0))
    with pytest.raises(SchemaError):
        TameCharacter(5, 2, (1,))


def test_decompose_multiplication_fixture():
    chars = decompose_tame(multiplication_rep(7, 2))
    assert [c.digits for c in chars] == [(0, 1), (1, 0)]


def test_decompose_identity_and_scalar():
    rep = TameRep(7, 1, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert [c.digits for c in decompose_tame(rep)] == [(0,)] * 3
    g = ext_field(11, 1).generator
    rep = TameRep(11, 1, ((pow(g, 3, 11),),))
    assert [c.digits for c in decompose_tame(rep)] == [(3,)]


def test_decompose_rejects_wrong_order():
    with pytest.raises(NotSemisimpleError):
        decompose_tame(TameRep(7, 1, ((1, 1), (0, 1))))


def test_rep_from_exponents_is_frobenius_closed():
    chars = decompose_tame(rep_from_exponents(11, 2, [34, 5]))
    got = sorted(c.digits for c in chars)
    # 34 = (1, 3) has conjugate (3, 1); 5 = (5, 0) has conjugate (0, 5)
    assert got == [(0, 5), (1, 3), (3, 1), (5, 0)]


def test_raise_level_examples():
    assert raise_level(TameCharacter(7, 1, (3,)), 2).digits == (3, 3)
    assert raise_level(TameCharacter(7, 2, (0, 0)), 6).digits == (0,) * 6
    assert raise_level(TameCharacter(7, 2, (1, 0)), 4).digits == (1, 0, 1, 0)
    with pytest.raises(SchemaError):
        raise_level(TameCharacter(7, 2, (1, 0)), 3)


def test_raise_level_pointwise_on_generator():
    ell = 5
    E = ext_field(ell, 2)
    c = TameCharacter(ell, 1, (3,))
    up = raise_level(c, 2)
    g = E.generator
    assert up.value(g, E) == value_on_subfield(c, norm(g, E, 1), E)


def test_serre_bound():
    ok, _ = check_serre_bound([TameCharacter(7, 2, (1, 1))], 1, 2)
    assert ok
    ok, verdicts = check_serre_bound([TameCharacter(7, 2, (5, 0)), TameCharacter(7, 2, (1, 2))], 1, 2)
    assert not ok and verdicts == [False, True]
    assert check_serre_bound([], 1, 1) == (True, [])


def test_rigidity_full_group():
    rep = multiplication_rep(7, 2)
    s = rep.matrix  # commutes with itself
    assert rigidity_check(rep, 1, s, 1) == "confirmed"


def test_rigidity_guard():
    rep = rep_from_exponents(7, 1, [1, 0])
    assert rigidity_check(rep, 3, np.eye(2, dtype=np.int64), 3) == "hypothesis-not-met"


def test_rigidity_input_errors():
    rep = rep_from_exponents(7, 1, [1, 0])
    with pytest.raises(SchemaError):
        rigidity_check(rep, 4, np.eye(2, dtype=np.int64), 1)
    with pytest.raises(NotSemisimpleError):
        rigidity_check(rep, 1, np.array([[1, 1], [0, 1]]), 1)


def test_rigidity_boundary_counterexample():
    # c * m = ell - 1: exponents 3 and 0 at ell = 7 agree on the index-2 subgroup,
    # so the swap commutes with f(H) but not with f
    rep = rep_from_exponents(7, 1, [3, 0])
    s = np.array([[0, 1], [1, 0]])
    assert rigidity_check(rep, 2, s, 3) == "violated"


def test_rigidity_strict_inequality_never_violated():
    rng = random.Random(11)
    from ellindep.ffcore.linalg import matpow_mod, nullspace_mod
    from ellindep.nori.cartan import is_semisimple_matrix

    seen = 0
    for _ in range(150):
        ell = rng.choice([7, 11, 13])
        d = rng.choice([1, 2])
        order = ell**d - 1
        ms = [m for m in range(1, ell) if order % m == 0 and (ell - 1) // m >= 2]
        m = rng.choice(ms)
        c = rng.randrange(1, (ell - 2) // m + 1)
        assert c * m < ell - 1
        exps = [digits_to_exponent([rng.randrange(c + 1) for _ in range(d)], ell) for _ in range(rng.choice([1, 2]))]
        rep = rep_from_exponents(ell, d, exps)
        n = rep.dim
        Gm = matpow_mod(rep.matrix, m, ell)
        system = np.array([(np.kron(np.eye(n, dtype=np.int64), Gm.T) - np.kron(Gm, np.eye(n, dtype=np.int64)))[i] for i in range(n * n)]) % ell
        basis = nullspace_mod(system, ell)
        for _ in range(10):
            coeffs = [rng.randrange(ell) for _ in basis]
            s = (sum(ci * b for ci, b in zip(coeffs, basis)) % ell).reshape(n, n)
            if is_semisimple_matrix(s, ell):
                break
        else:
            continue
        seen += 1
        assert rigidity_check(rep, m, s, c) != "violated"
    assert seen > 100


def test_json_round_trips():
    c = TameCharacter(11, 3, (1, 2, 3))
    assert TameCharacter.from_json(c.to_json()) == c
    r = multiplication_rep(5, 2)
    assert TameRep.from_json(r.to_json()) == r

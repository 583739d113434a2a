import numpy as np
import pytest

from ellindep.errors import (
    CommutationError,
    EnumerationOverflow,
    FieldError,
    LiftError,
    NotNilpotentError,
    NotUnipotentError,
    SchemaError,
    ThresholdError,
)
from ellindep.formchar import annihilator_lattice, canonical_form, formal_character, same_formal_character
from ellindep.nori import (
    DEFAULT,
    MatrixGroup,
    Thresholds,
    assemble_envelope,
    enumerate_group,
    group_order,
    identify_type,
    invariant_subspace,
    lie_algebra_of,
    lie_closure,
    nori_quotient,
    order_ell_elements,
    trunc_exp,
    trunc_log,
    weights_on_ambient,
)
from ellindep.nori.catalog import cartan_matrix, match_component, parse_type, types_of_rank
from ellindep.sysharness import gen_fixture

from oracles import bfs_order, bracket_saturation_dim, count_order_p

E = [[1, 1], [0, 1]]
F = [[1, 0], [1, 1]]
e_nil = np.array([[0, 1], [0, 0]])
f_nil = np.array([[0, 0], [1, 0]])


def sl2(p):
    return MatrixGroup(2, p, (E, F), "sl2")


def elementary_logs(n, p):
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                X = np.eye(n, dtype=np.int64)
                X[i, j] = 1
                out.append(trunc_log(X, p))
    return out


def symplectic_transvection_logs(p):
    J = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    out = []
    for v in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0], [0, 0, 1, 1]):
        v = np.array(v)
        out.append(np.outer(v, v @ J) % p)
    return out


# -- groups --------------------------------------------------------------------


def test_group_validation():
    with pytest.raises(FieldError):
        MatrixGroup(2, 9, (E,))
    with pytest.raises(FieldError):
        MatrixGroup(2, 7, ([[1, 1], [1, 1]],))
    with pytest.raises(SchemaError):
        MatrixGroup(3, 7, (E,))


def test_group_json_round_trip():
    G = sl2(7)
    H = MatrixGroup.from_json(G.to_json())
    assert H.n == 2 and H.ell == 7
    assert all(np.array_equal(a, b) for a, b in zip(G.generators, H.generators))


@pytest.mark.parametrize("p,order", [(5, 120), (7, 336), (11, 1320), (13, 2184)])
def test_sl2_orders_match_independent_bfs(p, order):
    assert group_order(sl2(p)) == order == bfs_order([E, F], p)


def test_enumeration_overflow():
    with pytest.raises(EnumerationOverflow):
        enumerate_group(sl2(13), cap=1000)
    with pytest.raises(EnumerationOverflow):
        order_ell_elements(sl2(13), "exhaustive", Thresholds(bfs_cap=1000))


def test_order_ell_elements_sl2_f7():
    U = order_ell_elements(sl2(7), "exhaustive")
    assert U.complete and len(U.elements) == 48 == count_order_p([E, F], 7)


def test_trivial_and_diagonal_groups_have_no_order_ell_elements():
    U = order_ell_elements(MatrixGroup(2, 7, ()), "exhaustive")
    assert U.complete and U.elements == []
    D = MatrixGroup(2, 7, ([[3, 0], [0, 5]],))
    assert order_ell_elements(D, "exhaustive").elements == []
    assert order_ell_elements(D, "scan").elements == []


def test_auto_mode_falls_back_to_scan():
    th = Thresholds(auto_cap=100)
    U = order_ell_elements(sl2(31), "auto", th, seed=3)
    assert not U.complete and U.elements
    assert lie_algebra_of(U.elements, 31, 2).dim == 3


def test_scan_is_deterministic():
    a = order_ell_elements(sl2(29), "scan", seed=5).elements
    b = order_ell_elements(sl2(29), "scan", seed=5).elements
    assert len(a) == len(b) and all(np.array_equal(x, y) for x, y in zip(a, b))


def test_unknown_mode():
    with pytest.raises(SchemaError):
        order_ell_elements(sl2(7), "bogus")


# -- exp / log -------------------------------------------------------------------


def test_trunc_log_examples():
    assert not np.any(trunc_log(np.eye(3, dtype=np.int64), 7))
    assert np.array_equal(trunc_log(np.array(E), 7), e_nil)
    J = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    L = trunc_log(J, 11)
    assert L[0, 2] == 5  # -1/2 mod 11
    assert np.array_equal(trunc_exp(L, 1, 11), J)


def test_trunc_exp_examples():
    assert np.array_equal(trunc_exp(np.zeros((3, 3), dtype=np.int64), 4, 7), np.eye(3, dtype=np.int64))
    assert np.array_equal(trunc_exp(e_nil, 1, 7), np.array(E))
    assert np.array_equal(trunc_exp(e_nil, 3, 7), np.array([[1, 3], [0, 1]]))


def test_explog_errors():
    with pytest.raises(NotUnipotentError):
        trunc_log(np.array([[2, 0], [0, 4]]), 7)
    with pytest.raises(NotNilpotentError):
        trunc_exp(np.eye(2, dtype=np.int64), 1, 7)
    with pytest.raises(ThresholdError):
        trunc_log(np.eye(5, dtype=np.int64), 3)


# -- Lie closure -------------------------------------------------------------------


def test_lie_closure_examples():
    assert lie_closure([e_nil, f_nil], 7).dim == 3
    assert lie_closure([e_nil], 7).dim == 1
    U = order_ell_elements(sl2(7), "exhaustive").elements
    s = lie_algebra_of(U, 7, 2)
    assert s.dim == 3
    assert s.contains(np.array([[1, 0], [0, 6]]))
    assert not s.contains(np.eye(2, dtype=np.int64))


def test_lie_closure_matches_oracle_sl3():
    logs = elementary_logs(3, 11)
    assert lie_closure(logs, 11).dim == bracket_saturation_dim(logs, 11) == 8


# -- type identification -----------------------------------------------------------


def test_identify_sl2():
    t = identify_type(lie_closure([e_nil, f_nil], 7), 0)
    assert t.rank == 1 and t.cartan_matrix == [[2]]
    assert t.factors == [{"type": "A1", "f": 1, "twist": 1}]
    assert t.num_roots == 2


def test_identify_sl3():
    t = identify_type(lie_closure(elementary_logs(3, 11), 11), 0)
    assert t.rank == 2 and t.num_roots == 6
    assert t.cartan_matrix == [[2, -1], [-1, 2]]
    assert [f["type"] for f in t.factors] == ["A2"]


def test_identify_sl2_x_sl2():
    z = np.zeros((2, 2), dtype=np.int64)
    blocks = [np.block([[x, z], [z, z]]) for x in (e_nil, f_nil)] + [np.block([[z, z], [z, x]]) for x in (e_nil, f_nil)]
    t = identify_type(lie_closure(blocks, 11), 0)
    assert t.rank == 2 and t.components == ["A1", "A1"]
    assert t.factors == [{"type": "A1", "f": 1, "twist": 1}] * 2


def test_identify_symplectic():
    s = lie_closure(symplectic_transvection_logs(11), 11)
    assert s.dim == 10
    t = identify_type(s, 0)
    assert t.rank == 2 and t.num_roots == 8
    assert t.components[0] in ("B2", "C2")


def test_identify_weil_restriction_has_f_two():
    b = gen_fixture("weil-res-sl2", [11])
    U = order_ell_elements(b.group(11), "scan", seed=0).elements
    s = lie_algebra_of(U, 11, 4)
    assert s.dim == 6
    t = identify_type(s, 0)
    assert t.factors == [{"type": "A1", "f": 2, "twist": 1}]
    assert t.components == ["A1", "A1"] and t.splitting_degree == 2


def test_identify_zero_algebra():
    s = lie_closure([], 7, n=3)
    t = identify_type(s, 0)
    assert t.dim == 0 and t.rank == 0 and t.factors == []


def test_identify_threshold():
    with pytest.raises(ThresholdError):
        identify_type(lie_closure([e_nil, f_nil], 5), 0)
    t = identify_type(lie_closure([e_nil, f_nil], 5), 0, Thresholds.with_ell_min(5))
    assert t.rank == 1


# -- weights, invariants, envelope -----------------------------------------------------


def _weights(s, th=DEFAULT):
    t = identify_type(s, 0, th)
    return t, weights_on_ambient(s, t, th)


def test_weights_standard_and_sym2():
    s = lie_closure([e_nil, f_nil], 7)
    _, w = _weights(s)
    assert sorted(w.weight_matrix[0]) == [-1, 1]
    b = gen_fixture("sym2", [11])
    s2 = lie_algebra_of(order_ell_elements(b.group(11)).elements, 11, 3)
    _, w2 = _weights(s2)
    assert sorted(w2.weight_matrix[0]) in ([-2, 0, 2],)


def test_weights_sl2_x_sl2():
    b = gen_fixture("sl2xsl2", [11])
    s = lie_algebra_of(order_ell_elements(b.group(11), "scan").elements, 11, 4)
    _, w = _weights(s)
    cols = sorted(tuple(abs(x) for x in c) for c in zip(*w.weight_matrix))
    assert cols == [(0, 1), (0, 1), (1, 0), (1, 0)]
    assert sorted(map(sorted, w.weight_matrix)) == [[-1, 0, 0, 1], [-1, 0, 0, 1]]


def test_weights_lift_needs_room():
    s = lie_closure([e_nil, f_nil], 7)
    t = identify_type(s, 0)
    with pytest.raises(LiftError):
        weights_on_ambient(s, t, Thresholds(weight_bound_override=4))


def test_invariant_subspace():
    s = lie_closure([e_nil, f_nil], 7)
    assert invariant_subspace(s, 2).dims() == {1: 0, 2: 1}
    assert invariant_subspace(s, 1).dim == 0
    z = lie_closure([], 7, n=2)
    assert invariant_subspace(z, 2).dim == 2 + 4


def test_envelope_with_scalar_torus_is_full():
    s = lie_closure([e_nil, f_nil], 7)
    t, w = _weights(s)
    env = assemble_envelope(s, t, w, [3 * np.eye(2, dtype=np.int64)])
    assert env.formal_character.basis == ()
    assert sorted(map(sorted, env.weight_matrix)) == [[-1, 1], [1, 1]]
    assert env.central_orders == [6]


def test_envelope_without_central_is_unchanged():
    s = lie_closure([e_nil, f_nil], 7)
    t, w = _weights(s)
    env = assemble_envelope(s, t, w)
    assert env.formal_character == formal_character(w.weight_matrix, 2)


def test_envelope_rejects_degenerate_central():
    s = lie_closure([e_nil, f_nil], 7)
    t, w = _weights(s)
    with pytest.raises(LiftError):
        assemble_envelope(s, t, w, [np.eye(2, dtype=np.int64)])
    with pytest.raises(CommutationError):
        assemble_envelope(s, t, w, [np.array([[3, 0], [0, 5]])])


def test_scalar_versus_sl2_torus_differ():
    sl2_fc = canonical_form(annihilator_lattice([[1, -1]]), 2)
    scalar_fc = canonical_form(annihilator_lattice([[1, 1]]), 2)
    assert not same_formal_character(sl2_fc, scalar_fc)


# -- quotient by the order-ell generated subgroup -----------------------------------------


def test_quotient_sl2_is_trivial():
    r = nori_quotient(sl2(7))
    assert r.ok and r.quotient_order == 1 and r.plus_order == 336


def test_quotient_sym2_has_order_two():
    # image of SL_2 in SO_3 is PSL_2 x {center}: the +-subgroup has index 2 in the torus intersection
    r = nori_quotient(gen_fixture("sym2", [7]).group(7))
    assert r.ok and r.quotient_order == 2 and r.plus_order == 168


def test_quotient_torus_only():
    r = nori_quotient(MatrixGroup(2, 7, ([[3, 0], [0, 5]],)))
    assert r.quotient_order == 1 and r.ok


# -- catalog -------------------------------------------------------------------


@pytest.mark.parametrize(
    "name,det", [("A1", 2), ("A3", 4), ("B3", 2), ("C3", 2), ("D4", 4), ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)]
)
def test_cartan_determinants(name, det):
    kind, rank = parse_type(name)
    A = np.array(cartan_matrix(kind, rank))
    assert round(np.linalg.det(A)) == det
    assert all(A[i, i] == 2 for i in range(rank))


def test_match_component_recovers_type_under_relabeling():
    A = np.array(cartan_matrix("B", 3))
    perm = [2, 0, 1]
    P = A[np.ix_(perm, perm)].tolist()
    kind, rank, _ = match_component(P, list(range(3)))
    assert (kind, rank) == ("B", 3)


def test_types_of_rank_two():
    assert {f"{k}{r}" for k, r in types_of_rank(2)} >= {"A2", "B2", "G2"}


def test_parse_type_errors():
    for bad in ("Z3", "E9", "D3", "A0", ""):
        with pytest.raises(ValueError):
            parse_type(bad)

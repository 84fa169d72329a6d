from fractions import Fraction

import pytest

from qsl2.modrep import (
    Label,
    RasskazovaParams,
    Vector,
    WeightModule,
    apply,
    check_relations,
    corrupt_one_entry,
    finite_dim_classical,
    finite_dim_quantum,
    rasskazova,
    verma_classical,
)
from qsl2.qarith import LaurentPoly, q_int, specialize_one, v

w = Label.findim
wv = Label.verma
wr = Label.rasskazova


def basis_vec(m, lab):
    return Vector.basis_vector(m, lab)


# -- finite-dimensional classical ------------------------------------------


def test_findim_classical_trivial():
    m = finite_dim_classical(0)
    assert m.dim == 1
    x = basis_vec(m, w(0))
    for g in ("e", "f", "h"):
        assert apply(m, g, x).is_zero()


def test_findim_classical_one():
    m = finite_dim_classical(1)
    assert apply(m, "e", basis_vec(m, w(1))).entries == {w(0): 1}
    assert apply(m, "f", basis_vec(m, w(0))).entries == {w(1): 1}
    assert apply(m, "h", basis_vec(m, w(0))).entries == {w(0): 1}
    assert apply(m, "h", basis_vec(m, w(1))).entries == {w(1): -1}


def test_findim_classical_two_commutator():
    m = finite_dim_classical(2)
    assert [m.weights[lab] for lab in m.basis] == [2, 0, -2]
    for lab in m.basis:
        x = basis_vec(m, lab)
        ef = apply(m, "e", apply(m, "f", x)) - apply(m, "f", apply(m, "e", x))
        assert ef == apply(m, "h", x)


def test_findim_negative_rejected():
    with pytest.raises(ValueError):
        finite_dim_classical(-1)
    with pytest.raises(ValueError):
        finite_dim_quantum(-2)


# -- finite-dimensional quantum ---------------------------------------------


def test_findim_quantum_trivial():
    m = finite_dim_quantum(0)
    x = basis_vec(m, w(0))
    assert apply(m, "K", x) == x
    assert apply(m, "E", x).is_zero()
    assert apply(m, "F", x).is_zero()


def test_findim_quantum_one():
    m = finite_dim_quantum(1)
    assert apply(m, "E", basis_vec(m, w(1))).entries == {w(0): LaurentPoly(1)}
    assert apply(m, "K", basis_vec(m, w(0))).entries == {w(0): v}


def test_findim_quantum_commutator_values():
    # in F_3, (EF - FE) w_1 = ([2][2] - [1][3]) w_1 = [3-2] w_1 = w_1
    m = finite_dim_quantum(3)
    x = basis_vec(m, w(1))
    d = apply(m, "E", apply(m, "F", x)) - apply(m, "F", apply(m, "E", x))
    assert q_int(2) * q_int(2) - q_int(1) * q_int(3) == LaurentPoly(1)
    assert d.entries == {w(1): LaurentPoly(1)}
    # in F_2 the weight of w_1 is zero and the commutator vanishes
    m2 = finite_dim_quantum(2)
    x2 = basis_vec(m2, w(1))
    d2 = apply(m2, "E", apply(m2, "F", x2)) - apply(m2, "F", apply(m2, "E", x2))
    assert d2.is_zero()


def test_findim_quantum_commutator_is_qint_of_weight():
    for n in range(0, 9):
        m = finite_dim_quantum(n)
        for lab in m.basis:
            x = basis_vec(m, lab)
            d = apply(m, "E", apply(m, "F", x)) - apply(m, "F", apply(m, "E", x))
            assert d == x.scaled(q_int(m.weights[lab]))


def test_quantum_specializes_to_classical():
    for n in range(0, 9):
        mq = finite_dim_quantum(n)
        mc = finite_dim_classical(n)
        assert [mq.weights[lab] for lab in mq.basis] == [
            mc.weights[lab] for lab in mc.basis
        ]
        for gq, gc in (("E", "e"), ("F", "f")):
            for col in mq.basis:
                qcol = {r: specialize_one(c) for r, c in mq.column(gq, col).items()}
                assert qcol == mc.column(gc, col)


# -- truncated Verma ---------------------------------------------------------


def test_verma_highest_weight_killed():
    for hw in (0, 2, Fraction(5, 2), -3):
        m = verma_classical(hw, 4)
        assert apply(m, "e", basis_vec(m, wv(0))).is_zero()


def test_verma_e_coefficients():
    m = verma_classical(0, 3)
    # e.w_1 = 1*(0-1+1) w_0 = 0
    assert apply(m, "e", basis_vec(m, wv(1))).is_zero()
    m = verma_classical(2, 3)
    # e.w_3 = 3*(2-3+1) w_2 = 0: the finite submodule inside
    assert apply(m, "e", basis_vec(m, wv(3))).is_zero()
    assert apply(m, "e", basis_vec(m, wv(2))).entries == {wv(1): 2}


def test_verma_boundary_marked():
    m = verma_classical(Fraction(5, 2), 8)
    assert m.boundary == {wv(8)}
    assert m.weights[wv(3)] == Fraction(5, 2) - 6


def test_verma_bad_depth():
    with pytest.raises(ValueError):
        verma_classical(1, 0)


def test_verma_maximal_submodule_invariant():
    # for integer hw = n, the span of w_{n+1}.. is invariant and the
    # quotient has the dimension of F_n
    n, depth = 2, 6
    m = verma_classical(n, depth)
    tail = {wv(k) for k in range(n + 1, depth + 1)}
    for g in ("e", "f", "h"):
        for col in tail:
            for row in m.column(g, col):
                assert row in tail, (g, col, row)
    assert m.dim - len(tail) == finite_dim_classical(n).dim


# -- Rasskazova family --------------------------------------------------------


def test_rasskazova_f_at_zero():
    m = rasskazova(RasskazovaParams(0, 0, 1, 2))
    assert apply(m, "f", basis_vec(m, wr(1, 0))).entries == {wr(1, -1): -1}


def test_rasskazova_e_vanishes_with_convention():
    # e.w^1_{-1} = (lam - beta + 0) w^1_0 + w^0_0 and both terms are zero
    m = rasskazova(RasskazovaParams(0, 0, 1, 2))
    assert apply(m, "e", basis_vec(m, wr(1, -1))).is_zero()


def test_rasskazova_f_with_lower_layer():
    m = rasskazova(RasskazovaParams(1, 2, 2, 3))
    got = apply(m, "f", basis_vec(m, wr(2, 1)))
    assert got.entries == {wr(2, 0): -2, wr(1, 0): -1}


def test_rasskazova_weights():
    m = rasskazova(RasskazovaParams(Fraction(-3), Fraction(5, 2), 2, 3))
    assert m.weights[wr(1, 2)] == 4 - 3
    assert m.weights[wr(2, -1)] == -2 - 3


def test_rasskazova_param_validation():
    with pytest.raises(ValueError):
        RasskazovaParams(0, 0, 0, 5)
    with pytest.raises(ValueError):
        RasskazovaParams(0, 0, 1, 0)


def test_rasskazova_filtration_never_raises_i():
    for n in (1, 2, 3):
        m = rasskazova(RasskazovaParams(1, 2, n, 4))
        for g in ("e", "f", "h"):
            for col, entries in m.action[g].items():
                for row in entries:
                    assert row.index[0] <= col.index[0]


# -- relation checking ---------------------------------------------------------


def test_relations_findim_classical():
    report = check_relations(finite_dim_classical(4))
    assert report.ok
    assert report.excluded == ()
    assert len(report.checked) == 5


def test_relations_findim_quantum():
    report = check_relations(finite_dim_quantum(5))
    assert report.ok
    assert report.flavor == "quantum"


def test_relations_verma_interior():
    report = check_relations(verma_classical(Fraction(5, 2), 8))
    assert report.ok
    assert report.excluded == (wv(8),)
    assert len(report.checked) == 8


def test_relations_rasskazova_interior():
    report = check_relations(rasskazova(RasskazovaParams(0, 0, 1, 5)))
    assert report.ok
    assert set(report.excluded) == {wr(1, -5), wr(1, 5)}
    assert {lab.index[1] for lab in report.checked} == set(range(-4, 5))


def test_relations_sweep():
    for n in range(0, 6):
        assert check_relations(finite_dim_classical(n)).ok
        assert check_relations(finite_dim_quantum(n)).ok
    for hw in (0, 1, 2, Fraction(5, 2), -3):
        assert check_relations(verma_classical(hw, 6)).ok
    for beta, lam in ((0, 0), (1, 2), (Fraction(-3), Fraction(5, 2))):
        for n in (1, 2, 3):
            assert check_relations(rasskazova(RasskazovaParams(beta, lam, n, 4))).ok


def test_relations_detect_corruption():
    bad = corrupt_one_entry(finite_dim_classical(3))
    report = check_relations(bad)
    assert not report.ok
    # the perturbed entry sits at (w_0, w_1) of e; exactly the [e,f]
    # route through that column breaks
    assert {(fl.relation, fl.label) for fl in report.failures} == {
        ("[e,f]=h", w(0)),
        ("[e,f]=h", w(1)),
    }
    for fl in report.failures:
        assert fl.defect


def test_corrupt_needs_raising_entries():
    with pytest.raises(ValueError):
        corrupt_one_entry(finite_dim_classical(0))


# -- apply ---------------------------------------------------------------------


def test_apply_diagonal():
    m = finite_dim_classical(2)
    assert apply(m, "h", basis_vec(m, w(0))).entries == {w(0): 2}


def test_apply_zero_vector():
    m = finite_dim_classical(2)
    assert apply(m, "e", Vector.zero(m)).is_zero()


def test_apply_linearity():
    m = finite_dim_quantum(1)
    x = basis_vec(m, w(0)) + basis_vec(m, w(1))
    assert apply(m, "E", x).entries == {w(0): LaurentPoly(1)}


def test_apply_flavor_mismatch():
    m = finite_dim_classical(2)
    with pytest.raises(ValueError):
        apply(m, "E", basis_vec(m, w(0)))
    other = finite_dim_classical(2)
    with pytest.raises(ValueError):
        apply(m, "e", basis_vec(other, w(0)))


# -- structural validation -------------------------------------------------------


def test_weight_grading_enforced():
    basis = [Label.findim(0), Label.findim(1)]
    weights = {basis[0]: Fraction(1), basis[1]: Fraction(-1)}
    h = {lab: {lab: wt} for lab, wt in weights.items()}
    # e mapping w_0 -> w_1 lowers the weight: must be rejected
    bad = {"e": {basis[0]: {basis[1]: Fraction(1)}}, "f": {}, "h": h}
    with pytest.raises(ValueError):
        WeightModule("classical", "bad", basis, weights, bad)


def test_vector_strips_zeros():
    m = finite_dim_classical(1)
    x = Vector(m, {w(0): Fraction(0), w(1): Fraction(2)})
    assert x.entries == {w(1): 2}
    assert (x - x).is_zero()

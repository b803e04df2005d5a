"""Ext elements, hypersurface cuts, realization, idempotent splitting, and
the disjoint-split check."""

import pytest

from civar.errors import (
    InputError,
    PremiseError,
    VerificationError,
)
from civar.cohomology import VarietyIdeal, support_variety
from civar.construct import (
    check_carlson,
    decompose,
    phi,
    pushout_cut,
    realize,
)
from civar.resolve import (
    RingSpec,
    direct_sum,
    free_module,
    hilbert_function,
    is_mcm,
    present_module,
    residue_field,
    resolve_min,
    syzygy_module,
    vector_model,
)


# ---------------------------------------------------------------------------
# phi


def test_phi_frozen_residue_field_r2(r2):
    th = phi(residue_field(r2), "chi1")
    assert th.n == 2
    assert th.internal_degree == 2
    assert [str(c) for c in th.cols] == ["(1)"]


def test_phi_zero_class(r1):
    # chi2 annihilates A/(x), so its chain map vanishes
    th = phi(present_module(r1, (0,), [["x"]]), "chi2")
    assert all(c.is_zero() for c in th.cols)


def test_phi_rejects_bad_inputs(r1):
    k = residue_field(r1)
    with pytest.raises(InputError):
        phi(k, "chi1 + chi2^2")  # inhomogeneous
    with pytest.raises(InputError):
        phi(k, "3")  # degree 0
    with pytest.raises(InputError):
        phi(k, "0")


def test_phi_mixed_internal_degree():
    rs = RingSpec(101, ["x", "y"], ["x^2", "y^3"])
    k = residue_field(rs)
    with pytest.raises(InputError) as exc:
        phi(k, "chi1 + chi2")  # internal degrees 2 and 3
    assert "mixed" in str(exc.value) or "internal" in str(exc.value)
    # pure monomials in either variable are fine
    assert phi(k, "chi1").internal_degree == 2
    assert phi(k, "chi2").internal_degree == 3


def test_phi_degree_two_class(r1):
    th = phi(residue_field(r1), "chi1*chi2")
    assert th.n == 4
    assert th.internal_degree == 4


# ---------------------------------------------------------------------------
# pushout_cut


def test_cut_on_wrong_module_rejected(r1):
    k = residue_field(r1)
    other = present_module(r1, (0,), [["x"]])
    th = phi(k, "chi1")
    with pytest.raises(InputError):
        pushout_cut(other, th)


def test_cut_residue_field_r2_is_free(r2):
    k = residue_field(r2)
    cut = pushout_cut(k, phi(k, "chi1"))
    assert cut.gens == (1,)
    assert len(cut.relations) == 0


def test_cut_zero_class_splits(r1):
    m1 = present_module(r1, (0,), [["x"]])
    th = phi(m1, "chi2")
    cut = pushout_cut(m1, th)
    # T = 0 gives syz^1(M) (+) M shifted by the internal degree
    assert sorted(cut.gens) == [1, 2]
    v = support_variety(cut)
    assert v.equals(support_variety(m1))


def test_cut_hilbert_additivity(r1):
    for rel, eta in ((["x"], "chi1"), (["x+y"], "chi1"), (["x"], "chi1*chi2")):
        m = present_module(r1, (0,), [rel])
        th = phi(m, eta)
        cut = pushout_cut(m, th)
        om = syzygy_module(m, th.n - 1)
        e = th.internal_degree
        top = max(cut.gens) + 3 if cut.gens else 3
        for d in range(top):
            want = (hilbert_function(m, d - e) if d >= e else 0) + hilbert_function(om, d)
            assert hilbert_function(cut, d) == want


def test_cut_variety_equality_on_mcm(r1):
    k = residue_field(r1)
    v_k = support_variety(k)
    for eta in ("chi1", "chi2", "chi1 + chi2"):
        cut = pushout_cut(k, phi(k, eta))
        expected = v_k.intersect(VarietyIdeal(r1.h_ring, [eta]))
        assert support_variety(cut).equals(expected)


def test_cut_inclusion_on_non_mcm(r4):
    # k over R4 has depth 0 < dim 1; only the containment is guaranteed
    k = residue_field(r4)
    assert not is_mcm(k)
    cut = pushout_cut(k, phi(k, "chi1"))
    v_cut = support_variety(cut)
    expected = support_variety(k).intersect(VarietyIdeal(r4.h_ring, ["chi1"]))
    assert expected.contains_variety(v_cut)


# ---------------------------------------------------------------------------
# realize


def test_realize_r1_principal(r1):
    got = realize(r1, ["chi1"])
    assert is_mcm(got)
    assert support_variety(got).equals(VarietyIdeal(r1.h_ring, ["chi1"]))


def test_realize_rejects_bad_eta(r1):
    with pytest.raises(InputError):
        realize(r1, ["0"])
    with pytest.raises(InputError):
        realize(r1, ["chi1 + 1"])


def test_realize_skip_verification(r1):
    got = realize(r1, ["chi2"], verify=False)
    assert support_variety(got).equals(VarietyIdeal(r1.h_ring, ["chi2"]))


# ---------------------------------------------------------------------------
# decompose


def test_decompose_splits_direct_sum(r1):
    m1 = present_module(r1, (0,), [["x"]])
    m2 = present_module(r1, (0,), [["y"]])
    dec = decompose(direct_sum(m1, m2))
    assert len(dec.summands) == 2
    assert dec.possibly_decomposable == [False, False]
    rels = sorted(str(s.relations[0]) for s in dec.summands)
    assert rels == ["(x)", "(y)"]


def test_decompose_indecomposable_stays_whole(r1):
    m = present_module(r1, (0,), [["x + y"]])
    dec = decompose(m)
    assert len(dec.summands) == 1
    assert dec.possibly_decomposable == [False]


def test_decompose_two_copies_of_k(r1):
    kk = direct_sum(residue_field(r1), residue_field(r1))
    dec = decompose(kk)
    assert len(dec.summands) == 2
    for s in dec.summands:
        assert vector_model(s).dim == 1


def test_decompose_preserves_dimension_and_betti(r1):
    m = direct_sum(
        direct_sum(present_module(r1, (0,), [["x"]]), residue_field(r1)),
        free_module(r1, (1,)),
    )
    dec = decompose(m)
    assert sum(vector_model(s).dim for s in dec.summands) == vector_model(m).dim
    whole = resolve_min(m, 5)
    parts = [resolve_min(s, 5) for s in dec.summands]
    for i in range(6):
        assert len(whole.degs[i]) == sum(len(r.degs[i]) for r in parts)


def test_decompose_deterministic(r1):
    m = direct_sum(present_module(r1, (0,), [["x"]]), present_module(r1, (0,), [["y"]]))
    one = decompose(m, seed=7)
    two = decompose(m, seed=7)
    assert [str(s.relations) for s in one.summands] == [
        str(s.relations) for s in two.summands
    ]


def test_decompose_needs_finite_length(r4):
    with pytest.raises(InputError):
        decompose(free_module(r4, (0,)))


# ---------------------------------------------------------------------------
# check_carlson


def test_carlson_axis_split(r1):
    m = direct_sum(
        present_module(r1, (0,), [["x"]]), present_module(r1, (0,), [["y"]])
    )
    res = check_carlson(
        m, VarietyIdeal(r1.h_ring, ["chi2"]), VarietyIdeal(r1.h_ring, ["chi1"])
    )
    assert res.verdict is True
    assert len(res.group1) == 1 and len(res.group2) == 1
    assert res.free == []
    assert res.v1.equals(VarietyIdeal(r1.h_ring, ["chi2"]))
    assert res.v2.equals(VarietyIdeal(r1.h_ring, ["chi1"]))


def test_carlson_free_summands_are_neutral(r1):
    m = direct_sum(
        direct_sum(present_module(r1, (0,), [["x"]]), free_module(r1, (2,))),
        present_module(r1, (0,), [["y"]]),
    )
    res = check_carlson(
        m, VarietyIdeal(r1.h_ring, ["chi2"]), VarietyIdeal(r1.h_ring, ["chi1"])
    )
    assert len(res.free) == 1
    assert res.verdict is True


def test_carlson_premise_union_mismatch(r1):
    m = direct_sum(
        present_module(r1, (0,), [["x"]]), present_module(r1, (0,), [["y"]])
    )
    with pytest.raises(PremiseError):
        check_carlson(
            m, VarietyIdeal(r1.h_ring, ["chi1"]), VarietyIdeal(r1.h_ring, ["chi1"])
        )


def test_carlson_premise_nontrivial_intersection(r1):
    k = residue_field(r1)
    # V(k) is the whole plane; (chi1) and (chi2) cover only the axes
    with pytest.raises(PremiseError):
        check_carlson(
            k, VarietyIdeal(r1.h_ring, ["chi1"]), VarietyIdeal(r1.h_ring, ["chi2"])
        )


def test_carlson_premise_infinite_length(r4):
    with pytest.raises(PremiseError):
        check_carlson(
            free_module(r4, (0,)),
            VarietyIdeal(r4.h_ring, ["chi1"]),
            VarietyIdeal(r4.h_ring, []),
        )


def test_carlson_single_sided_split(r1):
    # M = A/(x) alone with a2 empty on its side: union must still match
    m1 = present_module(r1, (0,), [["x"]])
    a1 = VarietyIdeal(r1.h_ring, ["chi2"])
    a2 = VarietyIdeal(r1.h_ring, ["chi1", "chi2"])  # trivial piece
    res = check_carlson(m1, a1, a2)
    assert res.group1 == [0]
    assert res.group2 == []
    assert res.verdict is True

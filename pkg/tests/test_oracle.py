"""The dense matrix oracle: raw scheme matrices and faithfulness of realize."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terwilliger.algebra import Element, basis_triples, to_raw
from terwilliger.oracle import (
    adjacency_matrix,
    annihilator_dim,
    default_base_point,
    dual_idempotent,
    identity_matrix,
    is_zero_matrix,
    mat_eq,
    mat_mul,
    points,
    realize,
    realize_raw,
    relation,
    span_rank,
)
from terwilliger.quotient import frobenius_left_ideal
from terwilliger.scheme import SchemeSpec, all_masks, valency

S23 = SchemeSpec(sizes=(2, 3))
S23_P2 = SchemeSpec(sizes=(2, 3), characteristic=2)
S23_P3 = SchemeSpec(sizes=(2, 3), characteristic=3)


def test_points_enumeration():
    got = points(S23)
    assert len(got) == 6
    assert got[0] == (0, 0)
    assert got[-1] == (1, 2)
    assert default_base_point(S23) == (0, 0)


def test_relation_is_the_disagreement_mask():
    assert relation(S23, (0, 0), (0, 0)) == 0
    assert relation(S23, (0, 0), (1, 0)) == 0b01
    assert relation(S23, (0, 0), (0, 2)) == 0b10
    assert relation(S23, (1, 2), (0, 1)) == 0b11


def test_adjacency_matrices_partition_all_pairs():
    total = sum(adjacency_matrix(S23, g) for g in all_masks(S23))
    assert np.all(np.asarray(total) == 1)
    assert mat_eq(adjacency_matrix(S23, 0), identity_matrix(S23))
    for g in all_masks(S23):
        a = adjacency_matrix(S23, g)
        assert mat_eq(a, a.T)
        assert set(np.asarray(a).sum(axis=1).tolist()) == {valency(S23, g)}


def test_dual_idempotents_partition_the_identity():
    x = (1, 2)
    total = sum(dual_idempotent(S23, x, g) for g in all_masks(S23))
    assert mat_eq(total, identity_matrix(S23))
    for g in all_masks(S23):
        e = dual_idempotent(S23, x, g)
        assert mat_eq(mat_mul(S23, e, e), e)
        for h in all_masks(S23):
            if h != g:
                assert is_zero_matrix(mat_mul(S23, e, dual_idempotent(S23, x, h)))


def test_realize_identity_and_zero():
    assert mat_eq(realize(S23_P3, Element.identity(S23_P3)), identity_matrix(S23_P3))
    assert is_zero_matrix(realize(S23_P3, Element.zero(S23_P3)))


def test_realize_matches_raw_realization():
    for spec in (S23, S23_P2):
        for triple in basis_triples(spec)[::3]:
            x = Element.basis(spec, triple, spec.field.of(3))
            assert mat_eq(realize(spec, x), realize_raw(spec, to_raw(x)))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_realize_is_multiplicative(data):
    spec = data.draw(st.sampled_from([S23, S23_P2, S23_P3]))
    triples = st.sampled_from(basis_triples(spec))
    coeffs = st.integers(-4, 4)

    def draw_elt():
        x = Element.zero(spec)
        for trip, c in data.draw(st.lists(st.tuples(triples, coeffs), max_size=3)):
            x = x.add(Element.basis(spec, trip, spec.field.of(c)))
        return x

    x, y = draw_elt(), draw_elt()
    lhs = realize(spec, x.mul(y))
    rhs = mat_mul(spec, realize(spec, x), realize(spec, y))
    assert mat_eq(lhs, rhs)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_realize_respects_transpose(data):
    spec = S23_P3
    triple = data.draw(st.sampled_from(basis_triples(spec)))
    x = Element.basis(spec, triple)
    assert mat_eq(realize(spec, x.transpose()), realize(spec, x).T)


def test_span_rank_of_the_full_basis_is_the_dimension():
    for spec in (S23, S23_P2, S23_P3):
        mats = [realize(spec, Element.basis(spec, triple)) for triple in basis_triples(spec)]
        assert span_rank(spec, mats) == 20
        assert span_rank(spec, mats + mats) == 20
    assert span_rank(S23, [identity_matrix(S23)]) == 1
    assert span_rank(S23, []) == 0


def test_realize_honors_the_base_point():
    spec = S23_P2
    triple = basis_triples(spec)[5]
    a = realize(spec, Element.basis(spec, triple), base_point=(0, 0))
    b = realize(spec, Element.basis(spec, triple), base_point=(1, 2))
    assert a.shape == b.shape
    assert not mat_eq(a, b)  # this particular triple moves with the base point


def test_oracle_cap_is_enforced():
    big = SchemeSpec(sizes=(7, 7, 7))
    with pytest.raises(ValueError):
        adjacency_matrix(big, 0, cap=200)
    small_cap = SchemeSpec(sizes=(2, 3))
    with pytest.raises(ValueError):
        realize(small_cap, Element.identity(small_cap), cap=4)


def test_annihilator_dimension_golden():
    assert annihilator_dim(S23_P2, frobenius_left_ideal(S23_P2)) == 16
    assert annihilator_dim(S23_P2, [Element.zero(S23_P2)]) == 20
    assert annihilator_dim(S23_P2, [Element.identity(S23_P2)]) == 0

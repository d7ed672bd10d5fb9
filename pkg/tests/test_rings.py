from __future__ import annotations

import json
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilclean.rings import (
    AxiomViolation,
    InvalidRingError,
    NotCentralError,
    NotIdempotentError,
    NotPrimeError,
    OrderCapExceededError,
    RingTable,
    characteristic,
    corner_ring,
    find_isomorphism,
    int_embed,
    make_gf,
    make_matrix_ring,
    make_product,
    make_zn,
    primary_decomposition,
    ring_from_json,
    ring_to_json,
    validate_ring,
)


def test_make_zn_basic():
    z5 = make_zn(5)
    assert z5.order == 5
    assert sorted({z5.mul[x][x] for x in z5.elements}) == [0, 1, 4]
    z1 = make_zn(1)
    assert z1.zero == z1.one == 0
    assert characteristic(z1) == 1
    assert characteristic(make_zn(12)) == 12
    with pytest.raises(ValueError):
        make_zn(0)


def test_constructed_rings_validate():
    for ring in (
        make_zn(6),
        make_gf(2, 2),
        make_gf(3, 2),
        make_product(make_zn(2), make_zn(4)),
        make_matrix_ring(make_zn(2), 2),
    ):
        assert validate_ring(ring) is None


def test_patched_table_reports_distributivity():
    z4 = make_zn(4)
    mul = [list(row) for row in z4.mul]
    assert mul[2][2] == 0
    mul[2][2] = 1
    broken = RingTable(4, z4.add, mul, 0, 1, "Z/4 patched")
    violation = validate_ring(broken)
    # first failure in scan order: (1+1)*2 = 2*2 = 1 but 1*2 + 1*2 = 0
    assert violation == AxiomViolation("distributivity", (1, 1, 2))


def test_validation_catches_each_axiom_family():
    # additive identity broken
    bad = RingTable(2, [[0, 0], [0, 0]], [[0, 0], [0, 1]], 0, 1)
    assert validate_ring(bad).axiom == "additive-identity"
    # multiplicative identity broken
    bad = RingTable(2, [[0, 1], [1, 0]], [[0, 0], [0, 0]], 0, 1)
    assert validate_ring(bad).axiom == "multiplicative-identity"
    # addition from a non-abelian group (symmetric group on 3 points)
    import itertools

    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    table = [[index[compose(p, q)] for q in perms] for p in perms]
    bad = RingTable(6, table, table, 0, 0)
    assert validate_ring(bad).axiom == "additive-commutativity"


def test_ring_table_structural_errors():
    with pytest.raises(ValueError):
        RingTable(2, [[0, 1]], [[0, 0], [0, 1]], 0, 1)
    with pytest.raises(ValueError):
        RingTable(2, [[0, 5], [1, 0]], [[0, 0], [0, 1]], 0, 1)
    with pytest.raises(ValueError):
        RingTable(2, [[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 3)


def test_ring_table_immutable():
    ring = make_zn(4)
    with pytest.raises(AttributeError):
        ring.order = 5


def test_make_gf():
    gf9 = make_gf(3, 2)
    assert gf9.order == 9
    assert characteristic(gf9) == 3
    # only 0 is nilpotent in a field
    for a in gf9.elements:
        x = a
        nil = False
        for _ in range(gf9.order):
            if x == gf9.zero:
                nil = True
                break
            x = gf9.mul[x][a]
        assert nil == (a == gf9.zero)
    assert make_gf(2, 1).add == make_zn(2).add
    assert make_gf(2, 1).mul == make_zn(2).mul
    with pytest.raises(NotPrimeError):
        make_gf(4, 1)
    with pytest.raises(OrderCapExceededError):
        make_gf(2, 9)


def test_gf4_is_the_example35_ring():
    from nilclean.catalog import get_ring

    assert find_isomorphism(get_ring("example3.5").ring, make_gf(2, 2)) is not None


def test_make_matrix_ring():
    m2 = make_matrix_ring(make_zn(2), 2)
    assert m2.order == 16
    noncommuting = [
        (a, b)
        for a in m2.elements
        for b in m2.elements
        if m2.mul[a][b] != m2.mul[b][a]
    ]
    assert noncommuting
    m2z3 = make_matrix_ring(make_zn(3), 2)
    assert m2z3.order == 81
    assert characteristic(m2z3) == 3
    m1 = make_matrix_ring(make_zn(2), 1)
    assert m1.add == make_zn(2).add and m1.mul == make_zn(2).mul
    with pytest.raises(OrderCapExceededError):
        make_matrix_ring(make_zn(5), 2)


def test_make_product():
    prod = make_product(make_zn(4), make_zn(3))
    assert prod.order == 12
    assert characteristic(prod) == 12
    trivial = make_product(make_zn(2), make_zn(1))
    assert find_isomorphism(trivial, make_zn(2)) is not None
    klein = make_product(make_zn(2), make_zn(2))
    assert sum(1 for x in klein.elements if klein.mul[x][x] == x) == 4


def test_int_embed():
    assert int_embed(make_zn(5), 7) == 2
    z12 = make_zn(12)
    assert int_embed(z12, 6) == 6
    assert z12.mul[6][6] == 0
    for ring in (make_zn(5), make_gf(2, 2), make_zn(1)):
        assert int_embed(ring, 0) == ring.zero
    assert int_embed(z12, -1) == 11


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 40), m=st.integers(-50, 50), k=st.integers(-50, 50))
def test_int_embed_is_a_ring_homomorphism(n, m, k):
    ring = make_zn(n)
    assert ring.add[int_embed(ring, m)][int_embed(ring, k)] == int_embed(ring, m + k)
    assert ring.mul[int_embed(ring, m)][int_embed(ring, k)] == int_embed(ring, m * k)


def test_int_embed_homomorphism_beyond_modular_rings():
    for ring in (make_gf(2, 3), make_gf(3, 2), make_matrix_ring(make_zn(2), 2)):
        for m in range(-6, 8):
            for k in range(-6, 8):
                em, ek = int_embed(ring, m), int_embed(ring, k)
                assert ring.add[em][ek] == int_embed(ring, m + k)
                assert ring.mul[em][ek] == int_embed(ring, m * k)


@settings(max_examples=30, deadline=None)
@given(a=st.integers(1, 15), b=st.integers(1, 15))
def test_product_characteristic_is_lcm(a, b):
    prod = make_product(make_zn(a), make_zn(b))
    assert characteristic(prod) == lcm(a, b)


def test_characteristic_examples():
    assert characteristic(make_zn(12)) == 12
    assert characteristic(make_gf(3, 2)) == 3
    assert characteristic(make_matrix_ring(make_zn(2), 2)) == 2


def test_corner_ring():
    z12 = make_zn(12)
    corner4 = corner_ring(z12, 4)
    assert corner4.ring.order == 3
    assert corner4.embed == (0, 4, 8)
    assert corner4.embed[corner4.ring.one] == 4
    corner9 = corner_ring(z12, 9)
    assert corner9.ring.order == 4
    assert corner9.embed == (0, 3, 6, 9)
    whole = corner_ring(z12, z12.one)
    assert whole.ring.add == z12.add and whole.ring.mul == z12.mul
    with pytest.raises(NotIdempotentError):
        corner_ring(z12, 2)
    m2 = make_matrix_ring(make_zn(2), 2)
    e11 = 1  # entry (0,0) set, a non-central idempotent
    assert m2.mul[e11][e11] == e11
    with pytest.raises(NotCentralError):
        corner_ring(m2, e11)


def test_corner_orders_multiply_for_complementary_idempotents():
    for ring in (make_zn(12), make_zn(30), make_product(make_zn(2), make_zn(9))):
        centrals = [
            e
            for e in ring.elements
            if ring.mul[e][e] == e
            and all(ring.mul[e][x] == ring.mul[x][e] for x in ring.elements)
        ]
        for e in centrals:
            complement = ring.sub(ring.one, e)
            assert (
                corner_ring(ring, e).ring.order
                * corner_ring(ring, complement).ring.order
                == ring.order
            )


def test_primary_decomposition_z12():
    pd = primary_decomposition(make_zn(12))
    assert [(f.prime, f.exponent) for f in pd.factors] == [(2, 2), (3, 1)]
    assert [f.central_idempotent for f in pd.factors] == [9, 4]
    assert [f.corner.order for f in pd.factors] == [4, 3]


def test_primary_decomposition_prime_power_and_trivial():
    z8 = make_zn(8)
    pd = primary_decomposition(z8)
    assert len(pd.factors) == 1
    assert pd.factors[0].corner.add == z8.add
    assert (pd.factors[0].prime, pd.factors[0].exponent) == (2, 3)
    assert len(primary_decomposition(make_gf(3, 2)).factors) == 1
    assert len(primary_decomposition(make_zn(1)).factors) == 1


def test_primary_decomposition_idempotent_identities(survey30):
    for entry in survey30:
        ring = entry.ring
        pd = primary_decomposition(ring)
        idems = [f.central_idempotent for f in pd.factors]
        assert ring.sum_elements(idems) == ring.one
        for i, e in enumerate(idems):
            assert ring.mul[e][e] == e
            assert all(ring.mul[e][x] == ring.mul[x][e] for x in ring.elements)
            for f in idems[i + 1 :]:
                assert ring.mul[e][f] == ring.zero
        orders = 1
        for f in pd.factors:
            orders *= f.corner.order
        assert orders == ring.order


def test_serialization_round_trip():
    from nilclean.catalog import get_ring

    for ring in (
        make_zn(6),
        make_gf(2, 3),
        make_product(make_zn(2), make_zn(3)),
        get_ring("example3.6").ring,
    ):
        data = json.loads(json.dumps(ring_to_json(ring)))
        back = ring_from_json(data)
        assert back.add == ring.add
        assert back.mul == ring.mul
        assert back.neg == ring.neg
        assert (back.zero, back.one, back.label) == (ring.zero, ring.one, ring.label)


def test_deserialization_rejects_broken_rings():
    data = ring_to_json(make_zn(4))
    data["mul"][2][2] = 1
    with pytest.raises(InvalidRingError):
        ring_from_json(data)
    with pytest.raises(ValueError):
        ring_from_json({"order": 2})


def test_find_isomorphism():
    assert find_isomorphism(make_zn(4), make_product(make_zn(2), make_zn(2))) is None
    phi = find_isomorphism(make_zn(6), make_product(make_zn(2), make_zn(3)))
    assert phi is not None
    with pytest.raises(ValueError):
        find_isomorphism(make_zn(9), make_gf(3, 2))

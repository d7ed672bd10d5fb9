from __future__ import annotations

import pytest

from nilclean.catalog import get_ring
from nilclean.decomposer import (
    Kind,
    all_squares,
    decompose_constructively,
    find_decomposition,
    verify_witness,
)
from nilclean.elements import classify
from nilclean.rings import PreconditionFailedError, make_gf, make_matrix_ring, make_zn

E = Kind.IDEMPOTENT
T = Kind.TRIPOTENT
P5 = Kind.FIVE_POTENT
V = Kind.INVOLUTION


def test_find_decomposition_examples():
    z5 = make_zn(5)
    witness = find_decomposition(z5, 4, (E, E, E, E))
    assert witness.parts == (1, 1, 1, 1)
    assert witness.nilpotent == 0
    assert find_decomposition(z5, 4, (E, E, E)) is None

    # the least witness for 7 in Z/12 with one tripotent slot takes the
    # smallest tripotent whose gap is nilpotent, not 7 itself
    witness = find_decomposition(make_zn(12), 7, (T,))
    assert witness.parts == (1,)
    assert witness.nilpotent == 6


def test_zero_decomposes_under_every_shape():
    for ring in (make_zn(6), make_gf(2, 2), make_zn(1)):
        for shape in ((E,), (T, T), (E, E, E, E), (P5,)):
            witness = find_decomposition(ring, ring.zero, shape)
            assert witness is not None
            assert set(witness.parts) <= {ring.zero}
            assert witness.nilpotent == ring.zero


def test_empty_shape_is_a_nilpotency_test():
    z12 = make_zn(12)
    witness = find_decomposition(z12, 6, ())
    assert witness == find_decomposition(z12, 6, ())
    assert witness.parts == () and witness.nilpotent == 6
    assert find_decomposition(z12, 7, ()) is None


def test_witnesses_verify_and_are_deterministic(small_corpus):
    shapes = ((E,), (E, E), (T,), (T, T), (E, V), (T, V), (P5,))
    for entry in small_corpus:
        ring = entry.ring
        for a in ring.elements:
            for shape in shapes:
                first = find_decomposition(ring, a, shape)
                second = find_decomposition(ring, a, shape)
                assert first == second
                if first is not None:
                    assert verify_witness(ring, a, first)
                    assert first.kinds == shape


def test_witness_is_lexicographically_least(small_corpus):
    import itertools

    for entry in small_corpus:
        ring = entry.ring
        cls = classify(ring)
        pool = sorted(cls.idempotents)
        for a in ring.elements:
            witness = find_decomposition(ring, a, (E, E))
            # enumerate all valid part tuples the slow way
            valid = [
                combo
                for combo in itertools.product(pool, repeat=2)
                if ring.mul[combo[0]][combo[1]] == ring.mul[combo[1]][combo[0]]
                and ring.mul[a][combo[0]] == ring.mul[combo[0]][a]
                and ring.mul[a][combo[1]] == ring.mul[combo[1]][a]
                and ring.sub(a, ring.add[combo[0]][combo[1]])
                in cls.nilpotents
                and all(
                    ring.mul[ring.sub(a, ring.add[combo[0]][combo[1]])][c]
                    == ring.mul[c][ring.sub(a, ring.add[combo[0]][combo[1]])]
                    for c in combo
                )
            ]
            if witness is None:
                assert not valid
            else:
                assert witness.parts == min(valid)


def test_monotonicity_appending_idempotent_slots(small_corpus):
    for entry in small_corpus:
        ring = entry.ring
        for a in ring.elements:
            for k in (1, 2, 3):
                if find_decomposition(ring, a, (E,) * k) is not None:
                    assert find_decomposition(ring, a, (E,) * (k + 1)) is not None


def test_all_squares():
    assert all_squares(make_zn(5)) == frozenset({0, 1, 4})
    assert all_squares(make_zn(4)) == frozenset({0, 1})
    gf4 = make_gf(2, 2)
    assert all_squares(gf4) == frozenset(gf4.elements)


def test_decompose_constructively_examples():
    witness = decompose_constructively(make_zn(9), 4)
    assert witness.kinds == (T, V)
    assert witness.parts == (0, 1)
    assert witness.nilpotent == 3

    witness = decompose_constructively(make_zn(4), 3)
    assert witness.kinds == (E, V)
    assert witness.parts == (0, 1)
    assert witness.nilpotent == 2

    for ring in (make_zn(4), make_zn(9), make_gf(2, 2)):
        witness = decompose_constructively(ring, ring.one)
        assert verify_witness(ring, ring.one, witness)
        assert witness.nilpotent == ring.zero


def test_decompose_constructively_precondition():
    with pytest.raises(PreconditionFailedError):
        decompose_constructively(make_zn(6), 5)


def test_decompose_constructively_exhaustive(survey30):
    from nilclean.elements import is_nilpotent
    from nilclean.lifting import inverse_of_two

    for entry in survey30:
        ring = entry.ring
        has_half = inverse_of_two(ring) is not None
        for a in ring.elements:
            tripotent_route = has_half and is_nilpotent(
                ring, ring.sub(a, ring.power(a, 3))
            )
            idempotent_route = is_nilpotent(ring, ring.sub(a, ring.mul[a][a]))
            if not (tripotent_route or idempotent_route):
                continue
            witness = decompose_constructively(ring, a)
            assert verify_witness(ring, a, witness)
            expected_kinds = (T, V) if tripotent_route else (E, V)
            assert witness.kinds == expected_kinds
            involution = witness.parts[1]
            assert ring.mul[involution][involution] == ring.one


def test_search_matches_matrix_rings():
    m2 = make_matrix_ring(make_zn(2), 2)
    # E11 + E22 = 1 with zero nilpotent: the identity splits into
    # commuting orthogonal idempotents
    witness = find_decomposition(m2, m2.one, (E, E))
    assert witness is not None
    assert verify_witness(m2, m2.one, witness)

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandlekit.errors import CapacityError, NotInvariantError, QuandleKitError
from quandlekit.quandles import (
    Quandle,
    dihedral_quandle,
    disjoint_union,
    orbits,
    partition_type,
    trivial_quandle,
)
from quandlekit.symmetry import (
    canonical_form,
    compose,
    enumerate_quandles,
    identity,
    inner_group,
    inverse,
    is_2transitive,
    is_left_2transitive,
    is_left_cyclic_type,
    is_left_peak_2transitive,
    is_right_2transitive,
    is_right_cyclic_type,
    is_right_orbit_2transitive,
    left_semigroup,
    maximal_subgroup_at_idempotents,
    quandle_polynomial,
    quandles_isomorphic,
    restricted_action,
)

ONE_SWAP = Quandle.from_table([[0, 0, 1], [1, 1, 0], [2, 2, 2]])


def test_compose_applies_right_first():
    f = (1, 2, 0)
    g = (0, 0, 0)
    assert compose(f, g) == (1, 1, 1)
    assert compose(g, f) == (0, 0, 0)


@given(st.permutations(list(range(6))))
def test_inverse_is_inverse(p):
    p = tuple(p)
    assert compose(p, inverse(p)) == identity(6)
    assert compose(inverse(p), p) == identity(6)


def test_inner_group_sizes():
    assert len(inner_group(trivial_quandle(4))) == 1
    assert len(inner_group(dihedral_quandle(3))) == 6
    assert len(inner_group(dihedral_quandle(5))) == 10


def test_left_semigroup_of_trivial_is_constants():
    h = left_semigroup(trivial_quandle(3))
    assert h.elements == frozenset({(0, 0, 0), (1, 1, 1), (2, 2, 2)})


def test_left_semigroup_of_latin_is_all_permutations():
    h = left_semigroup(dihedral_quandle(5))
    assert all(len(set(f)) == 5 for f in h.elements)


def test_closure_is_fixpoint():
    h = left_semigroup(ONE_SWAP)
    for f in h.elements:
        for g in h.elements:
            assert compose(f, g) in h.elements


def test_closure_capacity():
    with pytest.raises(CapacityError):
        inner_group(dihedral_quandle(7), cap=3)


def test_restricted_action():
    q = dihedral_quandle(4)
    gens = [tuple(q.table[i][j] for i in range(4)) for j in range(4)]
    restricted = restricted_action(gens, (0, 2))
    assert set(restricted) == {(0, 1), (1, 0)}
    with pytest.raises(NotInvariantError):
        restricted_action(gens, (0, 1))


def test_is_2transitive_basics():
    sym3 = [tuple(p) for p in itertools.permutations(range(3))]
    assert is_2transitive(sym3, 3)
    assert not is_2transitive([(0, 0, 0), (1, 1, 1), (2, 2, 2)], 3)
    assert is_2transitive([], 1)


def test_inn_r5_not_2transitive():
    assert not is_right_2transitive(dihedral_quandle(5))
    assert is_right_2transitive(dihedral_quandle(3))


def test_trivial_quandle_transitivity_flags():
    q = trivial_quandle(3)
    assert not is_right_2transitive(q)
    assert not is_left_2transitive(q)
    assert is_right_orbit_2transitive(q)  # singleton orbits are vacuous
    assert is_left_peak_2transitive(q)  # constants: rank-1 idempotents


def test_left_peak_2transitive_examples():
    # rows of R_3 generate S_3 acting 2-transitively
    assert is_left_peak_2transitive(dihedral_quandle(3))
    # the one-swap quandle has rank-2 maps but no rank-2 idempotent group
    assert not is_left_peak_2transitive(ONE_SWAP)
    # rows of R_5 generate the affine group of Z_5, which is 2-transitive
    assert is_left_peak_2transitive(dihedral_quandle(5))


def test_cyclic_type():
    assert is_right_cyclic_type(dihedral_quandle(3))
    assert not is_right_cyclic_type(trivial_quandle(3))
    assert not is_right_cyclic_type(dihedral_quandle(4))
    assert is_left_cyclic_type(dihedral_quandle(3))
    assert is_left_cyclic_type(dihedral_quandle(5))
    assert not is_left_cyclic_type(ONE_SWAP)


def test_right_2transitive_implies_right_cyclic():
    for n in range(2, 6):
        for q in enumerate_quandles(n):
            if is_right_2transitive(q):
                assert is_right_cyclic_type(q)


def test_maximal_subgroups_of_constants():
    h = left_semigroup(trivial_quandle(3))
    subs = maximal_subgroup_at_idempotents(h)
    assert len(subs) == 3
    for e, group in subs:
        assert compose(e, e) == e
        assert len(group.elements) == 1


def test_maximal_subgroup_of_group_is_group():
    h = left_semigroup(dihedral_quandle(3))
    subs = maximal_subgroup_at_idempotents(h)
    # rows generate a group, so the identity is the only idempotent
    assert len(subs) == 1
    _, group = subs[0]
    assert len(group.elements) == 6


def test_quandle_polynomial_trivial():
    qp = quandle_polynomial(trivial_quandle(4))
    assert qp.counts() == {(4, 4): 4}
    assert str(qp) == "4s^4t^4"


def test_quandle_polynomial_serialization():
    qp = quandle_polynomial(ONE_SWAP)
    data = qp.to_json()
    assert all(set(d) == {"r", "c", "mult"} for d in data)
    assert sum(d["mult"] for d in data) == 3


def test_isomorphic_to_relabeling():
    q = dihedral_quandle(5)
    sigma = (2, 0, 4, 1, 3)
    table = [[0] * 5 for _ in range(5)]
    for i in range(5):
        for j in range(5):
            table[sigma[i]][sigma[j]] = sigma[q.op(i, j)]
    relabeled = Quandle.from_table(table)
    found = quandles_isomorphic(q, relabeled)
    assert found is not None
    for i in range(5):
        for j in range(5):
            assert found[q.op(i, j)] == relabeled.op(found[i], found[j])


def test_isomorphism_size_mismatch():
    with pytest.raises(QuandleKitError):
        quandles_isomorphic(trivial_quandle(2), trivial_quandle(3))


def test_isomorphism_respects_invariants():
    qs = enumerate_quandles(4)
    for a, b in itertools.combinations(qs, 2):
        assert quandles_isomorphic(a, b) is None
        if quandle_polynomial(a) != quandle_polynomial(b):
            continue  # pruning path already exercised


def test_canonical_form_is_relabeling_invariant():
    q = dihedral_quandle(4)
    base = canonical_form(q)
    for sigma in itertools.permutations(range(4)):
        table = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                table[sigma[i]][sigma[j]] = sigma[q.op(i, j)]
        assert canonical_form(Quandle.from_table(table)) == base


def test_canonical_form_idempotent_on_order4():
    for q in enumerate_quandles(4):
        c = canonical_form(q)
        assert canonical_form(Quandle(4, c)) == c


def test_canonical_form_capacity():
    with pytest.raises(CapacityError):
        canonical_form(trivial_quandle(9))


def test_enumeration_counts_small():
    assert len(enumerate_quandles(1)) == 1
    assert len(enumerate_quandles(2)) == 1
    assert len(enumerate_quandles(3)) == 3
    assert len(enumerate_quandles(4)) == 7


def test_enumeration_bound():
    with pytest.raises(CapacityError):
        enumerate_quandles(7)


def test_enumeration_pairwise_non_isomorphic():
    for n in (3, 4):
        qs = enumerate_quandles(n)
        for a, b in itertools.combinations(qs, 2):
            assert quandles_isomorphic(a, b) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.randoms(use_true_random=False))
def test_enumeration_catches_random_relabelings(n, rng):
    qs = enumerate_quandles(n)
    q = qs[rng.randrange(len(qs))]
    sigma = list(range(n))
    rng.shuffle(sigma)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[sigma[i]][sigma[j]] = sigma[q.op(i, j)]
    assert canonical_form(Quandle.from_table(table)) == canonical_form(q)


def test_union_partition_type_adds():
    q = disjoint_union(dihedral_quandle(3), trivial_quandle(2))
    assert partition_type(q)[0] == 2
    assert partition_type(q)[2] == 1
    assert orbits(q) == ((0, 1, 2), (3,), (4,))

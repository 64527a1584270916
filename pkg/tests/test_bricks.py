"""Bricks, brick sets, maximal-set enumeration, and band families."""

import pytest

from fpq.bricks import (
    BrickSet,
    DerivedObject,
    band_family,
    band_kronecker,
    band_two_paths,
    brick_set,
    certify_brick_set,
    derived_hom_dim,
    is_brick,
    is_brick_set,
    maximal_brick_sets,
)
from fpq.errors import BadPathsError, CapExceededError, InputError, WrongQuiverError
from fpq.quiver import Quiver, Representation, direct_sum, simple
from fpq.typea import OrientationWord, all_intervals, interval_rep

A2 = OrientationWord(">").to_quiver()
KRON = Quiver(2, [("r1", 1, 2), ("r2", 1, 2)])


def intervals(word):
    w = OrientationWord(word)
    q = w.to_quiver()
    return [
        DerivedObject(interval_rep(w, v, q), 0, label=f"M[{v[0]},{v[1]}]")
        for v in all_intervals(w.n)
    ]


def test_bricks_and_non_bricks():
    s1 = simple(A2, 1)
    assert is_brick(DerivedObject(s1, 0))
    assert not is_brick(DerivedObject(direct_sum(s1, s1), 0))
    from fpq.quiver import zero_rep
    assert not is_brick(DerivedObject(zero_rep(A2), 0))


def test_derived_hom_between_shifts():
    """On a hereditary category the only nonzero derived homs between
    modules are at relative shifts 0 (hom) and 1 (ext)."""
    s1 = DerivedObject(simple(A2, 1), 0)
    s2 = DerivedObject(simple(A2, 2), 0)
    s2_up = DerivedObject(simple(A2, 2), 1)
    assert derived_hom_dim(s1, s2) == 0
    assert derived_hom_dim(s1, s2_up) == 1  # = dim Ext^1(S1, S2)
    assert derived_hom_dim(s2_up, s1) == 0
    assert derived_hom_dim(DerivedObject(simple(A2, 2), 5), s1) == 0


def test_certificate_is_identity_for_brick_sets():
    objs = intervals(">")
    ok, cert = certify_brick_set([objs[0], objs[2]])  # M[1,1], M[2,2]
    assert ok and cert == [[1, 0], [0, 1]]
    ok, cert = certify_brick_set([objs[0], objs[1]])  # Hom(M[1,2], M[1,1]) = k
    assert not ok
    bs = brick_set([objs[0], objs[2]])
    assert isinstance(bs, BrickSet) and len(bs) == 2
    with pytest.raises(InputError):
        brick_set([objs[0], objs[1]])
    with pytest.raises(InputError):
        brick_set([objs[0], objs[0]])


def test_maximal_brick_sets_on_the_two_vertex_line():
    objs = intervals(">")  # M[1,1], M[1,2], M[2,2]
    sets = maximal_brick_sets(objs)
    assert sets == [(0, 2), (1,)]


def test_maximal_brick_sets_rejects_bad_candidates():
    objs = intervals(">")
    with pytest.raises(InputError):
        maximal_brick_sets(objs + [objs[0]])
    bad = DerivedObject(direct_sum(objs[0].rep, objs[0].rep), 0)
    with pytest.raises(InputError):
        maximal_brick_sets(objs + [bad])


def test_enumeration_cap_carries_partial_results():
    objs = intervals("><>")
    with pytest.raises(CapExceededError) as err:
        maximal_brick_sets(objs, cap=3)
    assert err.value.payload()["cap"] == 3
    assert isinstance(err.value.partial, list)


def test_mixed_shift_candidates_enumerate():
    """A rigid module always coexists with its own shift (Ext^1(M, M) = 0),
    while Hom(S1, S2[1]) = Ext^1(S1, S2) = k keeps that pair apart."""
    w = OrientationWord(">")
    q = w.to_quiver()
    s1 = interval_rep(w, (1, 1), q)
    s2 = interval_rep(w, (2, 2), q)
    assert maximal_brick_sets(
        [DerivedObject(s1, 0), DerivedObject(s1, 1)]
    ) == [(0, 1)]
    assert maximal_brick_sets(
        [DerivedObject(s1, 0), DerivedObject(s2, 1)]
    ) == [(0,), (1,)]


def test_band_modules_are_a_growing_brick_family():
    fam = band_family(KRON)
    for size in (1, 2, 5):
        objs = fam(size)
        assert len(objs) == size
        assert is_brick_set(objs)
    b1, b2 = band_kronecker(KRON, 1), band_kronecker(KRON, 2)
    assert b1.dims == (1, 1) and b2.map_for("r2") == ((2,),)
    assert derived_hom_dim(DerivedObject(b1, 0), DerivedObject(b2, 0)) == 0


def test_band_kronecker_needs_the_kronecker_quiver():
    with pytest.raises(WrongQuiverError):
        band_kronecker(A2, 1)


def test_band_two_paths_on_a_commuting_square():
    square = Quiver(
        4, [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)]
    )
    fam = band_family(square, ["a", "b"], ["c", "d"])
    objs = fam(4)
    assert is_brick_set(objs)
    m = band_two_paths(square, ["a", "b"], ["c", "d"], 3)
    assert m.dims == (1, 1, 1, 1)
    with pytest.raises(BadPathsError):
        band_two_paths(square, ["a"], ["c", "d"], 1)  # endpoints differ
    with pytest.raises(BadPathsError):
        band_family(square, ["a", "b"], None)

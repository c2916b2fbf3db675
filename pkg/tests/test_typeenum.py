import pytest

from torusmotive.eigcfg import EigenConfig, configs_for_rank, symmetry_order
from torusmotive.errors import InvalidInput, UnsupportedRank
from torusmotive.typeenum import (IsotypicBlock, TypeDescriptor, canonical, count_raw,
                                  enumerate_types, flatten, orbit_multiplicity, raw_types)

K1 = EigenConfig((1, 1, 1), (1, 1, 1))
K2 = EigenConfig((1, 1, 1), (2, 1))
K3 = EigenConfig((2, 1), (1, 1, 1))


def test_rank_one_has_no_reducible_types():
    assert enumerate_types(EigenConfig((1,), (1,))) == []


def test_rank_two_types():
    orbits = enumerate_types(EigenConfig((1, 1), (1, 1)))
    assert [o.multiplicity for o in orbits] == [2, 4]
    assert sum(o.multiplicity for o in orbits) == count_raw(EigenConfig((1, 1), (1, 1)))


@pytest.mark.parametrize("cfg,n", [(K1, 7), (K2, 8), (K3, 8)])
def test_rank_three_orbit_counts(cfg, n):
    assert len(enumerate_types(cfg)) == n


def test_rank_four_orbit_total():
    assert sum(len(enumerate_types(c)) for c in configs_for_rank(4)) == 361


@pytest.mark.parametrize("cfg", configs_for_rank(3) + configs_for_rank(4))
def test_orbits_partition_the_raw_types(cfg):
    orbits = enumerate_types(cfg)
    assert sum(o.multiplicity for o in orbits) == count_raw(cfg)
    order = symmetry_order(cfg)
    for o in orbits:
        assert order % o.multiplicity == 0
        o.representative.validate(cfg)
        assert not o.representative.is_irreducible_shape()


def test_unpruned_includes_empty_strata():
    cfg = EigenConfig((2, 1, 1), (2, 1, 1))
    assert count_raw(cfg, prune=False) > count_raw(cfg)
    assert len(enumerate_types(cfg, prune=False)) > len(enumerate_types(cfg))


def test_canonical_is_orbit_invariant():
    for t in raw_types(K1)[:40]:
        img = t.relabel((2, 0, 1), (1, 2, 0))
        assert canonical(img, K1) == canonical(t, K1)
        assert orbit_multiplicity(img, K1) == orbit_multiplicity(t, K1)


def test_flatten_expands_multiplicity():
    b = IsotypicBlock(1, 2, (0,), (0,))
    t = TypeDescriptor(((b,), (IsotypicBlock(2, 1, (1, 2), (1, 2)),)))
    flat = flatten(t)
    assert [f.level for f in flat] == [0, 0, 1]
    assert t.rank == 4


def test_validation_errors():
    with pytest.raises(InvalidInput):
        IsotypicBlock(2, 1, (0,), (0, 1))
    t = TypeDescriptor(((IsotypicBlock(1, 3, (0,), (0,)),),))
    with pytest.raises(InvalidInput):
        t.validate(EigenConfig((3,), (3,)))
    bad = TypeDescriptor(((IsotypicBlock(1, 1, (0,), (0,)),),))
    with pytest.raises(InvalidInput):
        bad.validate(K1)


def test_render():
    t = TypeDescriptor(((IsotypicBlock(1, 1, (0,), (0,)),),
                        (IsotypicBlock(2, 1, (1, 2), (1, 2)),)))
    assert t.render() == "xi=({(1,1)},{(2,1)}); sigma_A=({{e1}},{{e2,e3}}); sigma_B=({{f1}},{{f2,f3}})"


def test_rank_limit():
    with pytest.raises(UnsupportedRank):
        enumerate_types(EigenConfig((1,) * 5, (1,) * 5))

import pytest
from hypothesis import given, strategies as st

from torusmotive.eigcfg import (EigenConfig, Partition, admissible, all_configs,
                                configs_for_rank, label_permutations, partitions_of,
                                symmetry_order)
from torusmotive.errors import UnsupportedPartition, UnsupportedRank


def test_partitions_of_small_ranks():
    assert partitions_of(1) == [(1,)]
    assert sorted(partitions_of(3)) == [(1, 1, 1), (2, 1), (3,)]
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(6)) == 11


@pytest.mark.parametrize("spec,parts", [
    ("1^4", (1, 1, 1, 1)),
    ("2^1,1^2", (2, 1, 1)),
    ("2^2", (2, 2)),
    ("3,1", (3, 1)),
])
def test_partition_parse(spec, parts):
    assert Partition.parse(spec).parts == parts


@pytest.mark.parametrize("bad", ["", "0", "a^2", "2^^1", "-1"])
def test_partition_parse_rejects(bad):
    with pytest.raises(UnsupportedPartition):
        Partition.parse(bad)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_partition_spec_round_trip(parts):
    p = Partition(tuple(parts))
    assert Partition.parse(p.spec()) == p
    assert Partition.from_counts(p.counts) == p
    assert p.rank == sum(parts)


def test_partition_str():
    assert str(Partition.parse("2^1,1^2")) == "{2,1^2}"


def test_config_is_canonical():
    assert EigenConfig((1, 2), (1, 1, 1)) == EigenConfig((2, 1), (1, 1, 1))
    with pytest.raises(UnsupportedPartition):
        EigenConfig((2, 1), (1, 1))


def test_admissible_counts():
    assert [len(configs_for_rank(r)) for r in (1, 2, 3, 4)] == [1, 1, 3, 10]
    assert not admissible(EigenConfig((2, 2), (2, 2)))
    assert not admissible(EigenConfig((3, 1), (2, 2)))
    assert admissible(EigenConfig((2, 1, 1), (2, 1, 1)))
    assert len(all_configs(4)) == 25


def test_configs_sorted():
    cs = configs_for_rank(4)
    assert cs == sorted(cs)


def test_unsupported_rank():
    with pytest.raises(UnsupportedRank):
        configs_for_rank(5)


def test_symmetry_order_and_permutations():
    cfg = EigenConfig((2, 1, 1), (1, 1, 1, 1))
    assert symmetry_order(cfg) == 2 * 24
    perms = list(label_permutations((2, 1, 1)))
    assert len(perms) == 2
    assert all(p[0] == 0 for p in perms)

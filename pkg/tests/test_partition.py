import pytest

from gamegraph import Partition
from figures import con_example


def test_normalisation():
    a = Partition(["x", "y", "x"])
    b = Partition([5, 3, 5])
    assert a == b and hash(a) == hash(b)
    assert a.block_of == (0, 1, 0)
    assert a.blocks == ((0, 2), (1,))


def test_from_blocks_and_labels():
    r = con_example()
    pi = Partition.from_labels(r, [["1", "2"], ["5", "6"]])
    assert pi.block_count == 4
    assert pi.notation(r) == "12|56"
    assert pi.label_blocks(r) == [["1", "2"], ["5", "6"]]
    assert pi.related(0, 1) and not pi.related(0, 2)
    with pytest.raises(ValueError):
        Partition.from_blocks(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Partition.from_blocks(3, [[0, 9]])


def test_refinement_order():
    d = Partition.discrete(4)
    a = Partition.from_blocks(4, [[0, 1]])
    b = Partition.from_blocks(4, [[0, 1, 2]])
    assert d <= a <= b
    assert not b <= a
    assert d.is_discrete() and not a.is_discrete()


def test_discrete_notation():
    r = con_example()
    assert Partition.discrete(r.n).notation(r) == "Δ"

import math

import pytest

import filterless as fl


def test_fig1_numbers():
    inst = fl.generate("fig1")
    assert inst.num_vertices == 8
    assert inst.num_requests == 6
    assert len(fl.digraph_arcs(inst)) == 6
    assert len(fl.max_independent_set(inst)) == 4
    assert len(fl.max_clique(inst)) == 2
    assert fl.oracle_chi(inst) == 2
    greedy = fl.greedy_mis_color(inst)
    assert greedy.num_colours == 3
    assert fl.is_proper(inst, greedy)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_c5kt(t):
    inst = fl.generate("c5kt", t=t)
    assert len(fl.max_clique(inst)) == 2 * t
    assert fl.oracle_chi(inst) == math.ceil(5 * t / 2)
    col = fl.color_2omega(inst)
    assert fl.is_proper(inst, col)
    assert col.num_colours <= 4 * t


def test_decide():
    assert fl.decide(fl.generate("c5kt", t=1), 3) is not None
    assert fl.decide(fl.generate("c5kt", t=2), 3) is None
    col = fl.decide(fl.generate("c5kt", t=2), 5)
    assert col is not None and col.num_colours <= 5


def test_round_trip_and_reduce():
    inst = fl.generate("random", m=8, n=12, seed=7)
    assert fl.generate("random", m=8, n=12, seed=7) == inst
    text = fl.serialize_instance(inst)
    assert fl.parse_instance(text) == inst
    reduced, forward = fl.reduce(inst)
    assert len(forward) == inst.num_vertices
    assert fl.digraph_arcs(reduced) == fl.digraph_arcs(inst)


def test_construct_and_errors():
    inst = fl.Instance(3, [(0, 1), (1, 2)], [(0, 1), (1, 2)])
    assert inst.requests == [(0, 1), (1, 2)]
    assert fl.interferes(inst, 0, 1)
    assert not fl.interferes(inst, 1, 0)
    approx = fl.color_2approx(inst, root=0)
    assert fl.is_proper(inst, approx)
    assert set(approx.tags) <= {"converging", "diverging", "unimodal"}
    with pytest.raises(fl.FilterlessError):
        fl.Instance(3, [(0, 1)], [(0, 1)])
    with pytest.raises(fl.FilterlessError):
        fl.parse_instance("p tree 2 1\ne 1 2\nr 2 2\n")
    with pytest.raises(ValueError):
        fl.generate("nonsense")

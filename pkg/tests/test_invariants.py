import pytest

from _oracles import omega_loc_bruteforce
from partgraph import (
    CapacityError,
    Caps,
    DomainError,
    build_graph,
    extremal_record,
    local_clique_number,
    local_clique_numbers,
    local_translation_check,
    monotonicity_check,
)
from partgraph.invariants import _clique_bigint, local_complexity


def test_triangle_vertex_in_g4():
    g = build_graph(4)
    assert local_clique_number(g, g.vertex_id((3, 1))) == 3


def test_g3_has_no_triangle():
    g = build_graph(3)
    assert all(local_clique_number(g, v) <= 2 for v in range(3))


def test_isolated_vertex():
    assert local_clique_number(build_graph(1), 0) == 1


def test_bad_vertex():
    with pytest.raises(DomainError):
        local_clique_number(build_graph(3), 7)


@pytest.mark.parametrize("n", range(1, 9))
def test_matches_whole_graph_enumeration(n):
    g = build_graph(n)
    expected = omega_loc_bruteforce(n)
    assert local_clique_numbers(n).tolist() == [expected[lam] for lam in g.vertices]


@pytest.mark.parametrize("n", [10, 16, 22])
def test_bigint_path_agrees_with_kernel(n):
    g = build_graph(n)
    kernel = local_clique_numbers(n)
    assert [_clique_bigint(g, v) for v in range(g.vertex_count)] == kernel.tolist()


@pytest.mark.parametrize("n", [5, 12, 20])
def test_local_bounds(n):
    g = build_graph(n)
    for v in range(g.vertex_count):
        lc = local_complexity(g, v)
        assert 1 <= lc.omega_loc <= lc.degree + 1
        assert lc.s_loc == lc.omega_loc - 1


@pytest.mark.parametrize("n, delta, omega", [(1, 0, 1), (3, 2, 2), (4, 3, 3)])
def test_extremal_examples(n, delta, omega):
    rec = extremal_record(n)
    assert (rec.delta, rec.omega, rec.s) == (delta, omega, omega - 1)


def test_extremal_witness_is_lowest_id():
    rec = extremal_record(4)
    g = build_graph(4)
    assert rec.delta_witness == (3, 1)
    assert g.degree[g.vertex_id(rec.delta_witness)] == rec.delta
    assert rec.to_dict() == {"n": 4, "delta": 3, "omega": 3, "s": 2, "delta_witness": "3,1", "omega_witness": "3,1"}


def test_neighborhood_cap():
    g = build_graph(12)
    with pytest.raises(CapacityError, match="vertex"):
        local_clique_number(g, int(g.degree.argmax()), Caps(neighborhood=3))


def test_level_cap():
    with pytest.raises(CapacityError):
        extremal_record(26)


class TestMonotonicity:
    def test_one_two(self):
        rep = monotonicity_check(1, 2)
        assert rep.passed
        assert rep.comparisons[0] == {"quantity": "delta", "n": 1, "value": 0, "next_value": 1, "ok": True}

    def test_vacuous(self):
        rep = monotonicity_check(1, 1)
        assert rep.passed and rep.comparisons == []

    def test_one_to_ten(self):
        rep = monotonicity_check(1, 10)
        assert rep.passed
        assert len(rep.comparisons) == 27

    def test_bad_range(self):
        with pytest.raises(DomainError):
            monotonicity_check(5, 3)


@pytest.mark.parametrize("n, tau", [(3, (1,)), (1, (1,)), (4, (2, 1)), (7, (3,)), (6, (1, 1, 1))])
def test_local_translation(n, tau):
    rep = local_translation_check(n, tau)
    assert rep.passed
    assert len(rep.rows) == build_graph(n).vertex_count

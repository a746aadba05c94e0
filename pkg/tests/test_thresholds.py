import pytest

from _oracles import motif_tuples
from partgraph import DomainError, builtin_templates, extremal_record, extremal_threshold, motif_threshold
from partgraph.motifs import TemplateRegistry

T = builtin_templates()
REG = TemplateRegistry()


@pytest.mark.parametrize("name", ["bl1", "br1"])
def test_canonical_families_first_at_four(name):
    res = motif_threshold(REG.get(name), 20)
    assert res.first_n == 4
    assert res.stability_verified_to == 20


@pytest.mark.parametrize("name, bound", [("p2", 8), ("e1", 6), ("rsq", 9)])
def test_within_proved_bounds(name, bound):
    res = motif_threshold(T[name], 15)
    assert res.first_n is not None and res.first_n <= bound


@pytest.mark.parametrize("name, first", [("p2", 3), ("e1", 4), ("k4", 7)])
def test_exact_first_levels_against_tuple_oracle(name, first):
    # frozen from brute-force tuple enumeration
    t = T[name]
    assert motif_threshold(t, 10).first_n == first
    assert not motif_tuples(first - 1, t.vertex_count, t.edges, t.roots)
    assert motif_tuples(first, t.vertex_count, t.edges, t.roots)


def test_rsq_first_level():
    t = T["rsq"]
    assert motif_threshold(t, 10).first_n == 7
    assert not motif_tuples(6, t.vertex_count, t.edges, t.roots)


def test_not_found():
    res = motif_threshold(T["k5"], 6)
    assert res.first_n is None
    assert res.to_dict()["status"] == "not found up to 6"


def test_witness_payload():
    d = motif_threshold(T["e1"], 8).to_dict()
    assert d["status"] == "found"
    assert d["witness"]["n"] == 4


def test_rescan_is_deterministic():
    a = motif_threshold(T["rsq"], 12).to_dict()
    b = motif_threshold(T["rsq"], 12).to_dict()
    assert a == b


def test_bad_n_max():
    with pytest.raises(DomainError):
        motif_threshold(T["e1"], 0)


@pytest.mark.parametrize("kind, bound, first", [("omega", 3, 4), ("delta", 0, 1), ("s", 2, 4), ("delta", 3, 4)])
def test_extremal(kind, bound, first):
    assert extremal_threshold(kind, bound, 12).first_n == first


@pytest.mark.parametrize("s", range(0, 5))
def test_s_threshold_is_shifted_omega(s):
    a = extremal_threshold("s", s, 20).first_n
    b = extremal_threshold("omega", s + 1, 20).first_n
    assert a == b


def test_extremal_threshold_meets_bound():
    res = extremal_threshold("omega", 5, 20)
    assert extremal_record(res.first_n).omega >= 5
    assert extremal_record(res.first_n - 1).omega < 5


def test_extremal_errors():
    with pytest.raises(DomainError):
        extremal_threshold("girth", 1, 5)
    with pytest.raises(DomainError):
        extremal_threshold("delta", -1, 5)

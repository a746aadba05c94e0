import csv
import io
import json
from fractions import Fraction

import pytest

from _oracles import pentagonal_p
from partgraph import (
    DomainError,
    Zone,
    build_atlas,
    carrier_distribution,
    classify_zone,
    conjugate,
    growth_profile,
    normalized_profile,
)
from partgraph.atlas import ZONE_NOTE, render_ratio, zone_histogram
from partgraph.partitions import enumerate_partitions


@pytest.mark.parametrize("lam, zone", [
    ((3, 2, 1), Zone.AXIS),
    ((3, 3, 3), Zone.AXIS),
    ((5,), Zone.BOUNDARY_FRONT),
    ((1, 1, 1, 1, 1), Zone.BOUNDARY_FRONT),
    ((2, 2, 1), Zone.AXIS_NEAR),
    ((3, 3, 3, 1), Zone.AXIS_NEAR),
    ((4, 4, 4), Zone.REAR),
    ((6, 3, 1), Zone.INTERIOR),
])
def test_zone_examples(lam, zone):
    assert classify_zone(lam) is zone


def test_zone_of_empty():
    with pytest.raises(DomainError):
        classify_zone(())


@pytest.mark.parametrize("n", range(1, 16))
def test_zones_are_conjugation_invariant_and_total(n):
    verts = enumerate_partitions(n)
    hist = zone_histogram(verts)
    assert sum(hist.values()) == pentagonal_p(n)[n]
    for lam in verts:
        assert classify_zone(lam) == classify_zone(conjugate(lam))


class TestCarriers:
    def test_n4(self):
        c = carrier_distribution(4, ["e1", "bl1"])
        assert sum(c["max_degree"].values()) == 2  # (3,1) and (2,1,1)
        # the root (3,1) is one transfer from its conjugate
        assert c["roots:bl1"] == {"axis": 0, "axis_near": 1, "boundary_front": 0, "rear": 0, "interior": 0}

    def test_e1_roots_in_g6(self):
        c = carrier_distribution(6, ["e1"])
        assert c["roots:e1"]["axis"] >= 1  # (2,2,2) roots a triangle


class TestProfiles:
    def test_vertices(self):
        assert growth_profile("vertices", 1, 5) == [1, 2, 3, 5, 7]

    def test_delta(self):
        assert growth_profile("delta", 1, 3) == [0, 1, 2]

    def test_motif_kind(self):
        assert growth_profile("motif:bl1", 3, 5) == [0, 1, 1]

    def test_self_ratio(self):
        assert normalized_profile("edges", "edges", 2, 8) == [Fraction(1)] * 7

    def test_zero_denominator(self):
        with pytest.raises(DomainError, match="n=1"):
            normalized_profile("vertices", "delta", 1, 3)

    def test_unknown(self):
        with pytest.raises(DomainError):
            growth_profile("girth", 1, 3)

    def test_bad_range(self):
        with pytest.raises(DomainError):
            growth_profile("vertices", 4, 2)


def test_render_ratio():
    assert render_ratio(Fraction(2, 3)) == "0.666667"
    assert render_ratio(Fraction(1, 1)) == "1.000000"


def _thresholds(atlas):
    return {row["name"]: row for row in atlas.to_dict()["summary"]["thresholds"]}


class TestAtlas:
    def test_boundary_families_exact(self):
        rows = _thresholds(build_atlas(4, 4))
        for name in ("bl1", "br1"):
            assert rows[name]["status"] == "exact_threshold"
            assert rows[name]["value"] == 4
            assert rows[name]["value_source"] == "proved"

    def test_weak_template_row(self):
        row = _thresholds(build_atlas(6, 6))["e1"]
        assert row["status"] == "stable_threshold_bounded"
        assert row["paper_bound"] == 6
        assert row["value"] == 4 and row["scan_range"] == [1, 6]

    def test_atlas_only_row(self):
        row = _thresholds(build_atlas(5, 8))["k4"]
        assert (row["status"], row["value"], row["paper_bound"]) == ("atlas_only", 7, None)

    def test_degenerate_level(self):
        rec = build_atlas(1, 1).to_dict()["records"][0]
        assert rec["vertex_count"] == 1 and rec["edge_count"] == 0
        assert set(rec["motif_counts"].values()) == {0}
        assert rec["extremal"]["delta"] == 0

    def test_note_present(self):
        assert build_atlas(2, 3).to_dict()["summary"]["zone_rules"] == ZONE_NOTE

    def test_byte_identical(self):
        assert build_atlas(1, 9).to_json() == build_atlas(1, 9).to_json()

    def test_csv(self):
        atlas = build_atlas(3, 5, ["e1"])
        rows = list(csv.reader(io.StringIO(atlas.to_csv().decode())))
        assert rows[0] == ["n", "metric", "value"]
        assert ["4", "motif:e1", "6"] in rows
        assert ["5", "vertex_count", "7"] in rows

    def test_record_shape(self):
        payload = json.loads(build_atlas(6, 6, ["e1"]).to_json())
        rec = payload["records"][0]
        assert rec["degree_spectrum"] == sorted(rec["degree_spectrum"])
        assert rec["profiles"]["edges/vertices"]["den"] > 0
        assert sum(rec["zone_histogram"].values()) == 11

    def test_bad_range(self):
        with pytest.raises(DomainError):
            build_atlas(3, 2)

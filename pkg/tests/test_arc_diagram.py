"""Arc diagrams: validation and the surfaces they present."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strands_decat import corpus
from strands_decat.arc_diagram import (
    CIRCLE,
    INTERVAL,
    InvalidIntervalError,
    diagram_from_dict,
    homology_basis,
    make_diagram,
    phi_pairing,
    surface_type,
    validate,
)


def pattern(name):
    return surface_type(corpus.diagram(name)).canonical()


def test_corpus_is_valid():
    for name in corpus.DIAGRAMS:
        assert validate(corpus.diagram(name)) == []


def test_single_band_is_an_annulus():
    # a disk with one untwisted band: two boundary circles, one of them misses S+
    assert pattern("D1") == [{"genus": 0, "boundary": ["fully_minus", {"minus": 1, "plus": 1}]}]


def test_interleaved_pairs_give_a_punctured_torus():
    assert pattern("D2") == [{"genus": 1, "boundary": [{"minus": 1, "plus": 1}]}]


def test_nested_pairs_stay_planar():
    comps = pattern("D3")
    assert comps[0]["genus"] == 0 and len(comps[0]["boundary"]) == 3


def test_band_between_intervals_is_a_disk():
    assert pattern("D4") == [{"genus": 0, "boundary": [{"minus": 2, "plus": 2}]}]


def test_circle_component_is_fully_plus():
    s = surface_type(corpus.diagram("D5"))
    kinds = sorted(str(c.pattern()) for c in s.components[0].boundary)
    assert "fully_plus" in kinds


@pytest.mark.parametrize("g", [1, 2, 3])
def test_standard_genus_g_chain(g):
    pairs = []
    for k in range(g):
        base = 4 * k
        pairs += [(base + 1, base + 3), (base + 2, base + 4)]
    d = make_diagram([(INTERVAL, range(1, 4 * g + 1))], pairs)
    (comp,) = surface_type(d).components
    assert comp.genus == g and len(comp.boundary) == 1


@pytest.mark.parametrize("n", [1, 2, 4])
def test_consecutive_bands_are_planar(n):
    d = make_diagram([(INTERVAL, range(1, 2 * n + 1))], [(2 * k + 1, 2 * k + 2) for k in range(n)])
    (comp,) = surface_type(d).components
    assert comp.genus == 0 and len(comp.boundary) == n + 1


def test_validation_messages():
    bad = make_diagram([(INTERVAL, [1, 2, 3])], [(1, 2)])
    assert any("unmatched" in p for p in validate(bad))
    twice = make_diagram([(INTERVAL, [1, 2]), (INTERVAL, [2])], [(1, 2)])
    assert any("more than once" in p for p in validate(twice))
    loose = make_diagram([(INTERVAL, [1, 2])], [(1, 2), (2, 7)])
    problems = validate(loose)
    assert any("unplaced" in p for p in problems) and any("matched 2 times" in p for p in problems)
    with pytest.raises(ValueError):
        diagram_from_dict({"components": [{"kind": "blob", "points": [1]}], "matching": []})
    with pytest.raises(ValueError):
        surface_type(bad)


def test_phi_pairing_counts_ends_mod_two():
    d = corpus.diagram("D4")
    assert phi_pairing(d, (1, 2), 0) == 1
    d2 = corpus.diagram("D2")
    assert phi_pairing(d2, (1, 3), 0) == 0
    with pytest.raises(InvalidIntervalError):
        phi_pairing(corpus.diagram("D5"), (1, 5), 1)


@st.composite
def diagrams(draw):
    n_pairs = draw(st.integers(1, 5))
    pts = list(range(1, 2 * n_pairs + 1))
    order = draw(st.permutations(pts))
    cuts = sorted(draw(st.lists(st.integers(1, len(pts) - 1), max_size=3, unique=True))) if len(pts) > 1 else []
    comps, prev = [], 0
    for c in cuts + [len(pts)]:
        comps.append((draw(st.sampled_from([INTERVAL, INTERVAL, CIRCLE])), order[prev:c]))
        prev = c
    if all(k == CIRCLE for k, _ in comps):
        comps[0] = (INTERVAL, comps[0][1])
    partners = draw(st.permutations(pts))
    matching = [(partners[2 * i], partners[2 * i + 1]) for i in range(n_pairs)]
    return make_diagram(comps, matching)


@given(diagrams())
def test_relative_homology_rank_is_number_of_pairs(d):
    assert validate(d) == []
    s = surface_type(d)
    assert s.h1_rank() == d.n_pairs == len(homology_basis(d))


@given(diagrams(), st.data())
def test_surface_is_invariant_under_renaming_and_rotation(d, data):
    perm = data.draw(st.permutations(list(d.points)))
    renamed = d.relabel(dict(zip(d.points, [p + 100 for p in perm])))
    assert surface_type(renamed).canonical() == surface_type(d).canonical()
    # rotating the points of a circle is a homeomorphism of Z
    comps = []
    for c in d.components:
        pts = list(c.points)
        if c.kind == CIRCLE and pts:
            k = data.draw(st.integers(0, len(pts) - 1))
            pts = pts[k:] + pts[:k]
        comps.append((c.kind, pts))
    rotated = make_diagram(comps, d.matching)
    assert surface_type(rotated).canonical() == surface_type(d).canonical()

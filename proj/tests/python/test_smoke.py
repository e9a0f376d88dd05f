"""End-to-end smoke tests for the Python bindings."""

import json

import pytest

import ladderplan as lp

LADDER = [(1, 1), (2, 2), (3, 3)]
FAN = [(1, 3), (2, 2), (3, 1)]
K4 = [(1, 1), (1, 2), (2, 1), (2, 2)]
K33 = [(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)]


def test_instance_construction():
    g = lp.make_ladder(3, 3, LADDER)
    assert (g.m, g.n) == (3, 3)
    assert g.cross == LADDER
    assert g.contains((2, 2)) and not g.contains((1, 2))
    assert g == lp.make_ladder(3, 3, list(reversed(LADDER)))
    assert g == lp.from_functigraph([1, 2, 3])
    assert "m=3" in repr(g)

    with pytest.raises(lp.DuplicateEdgeError):
        lp.make_ladder(3, 3, [(1, 1), (1, 1)])
    with pytest.raises(lp.IndexOutOfRangeError):
        lp.make_ladder(3, 3, [(4, 1)])
    with pytest.raises(lp.TooManyEdgesError):
        lp.random_instance(1, 2, 2, 5)


def test_fixture_verdicts():
    assert lp.is_planar(lp.make_ladder(3, 3, LADDER))
    assert lp.is_outerplanar(lp.make_ladder(3, 3, LADDER))
    assert lp.is_planar(lp.make_ladder(2, 2, K4))
    assert not lp.is_outerplanar(lp.make_ladder(2, 2, K4))
    assert not lp.is_planar(lp.make_ladder(3, 3, K33))

    rep = lp.planarity_report(lp.make_ladder(3, 3, K33))
    assert not rep.verdict and rep.witness_edge == (2, 2)

    rep = lp.outerplanarity_report(lp.make_ladder(3, 3, FAN))
    assert rep.verdict and rep.condition == lp.OuterplanarCondition.anti_monotone
    rep = lp.outerplanarity_report(lp.make_ladder(3, 3, LADDER))
    assert rep.verdict and rep.condition == lp.OuterplanarCondition.monotone


def test_quadrant_flags():
    g = lp.make_ladder(3, 3, K33)
    f = lp.quadrant_flags(g, (2, 2))
    assert (f.up_down, f.up_up, f.down_up, f.down_down) == (True, True, True, True)
    assert f == lp.quadrant_flags_naive(g, (2, 2))
    with pytest.raises(lp.EdgeNotInInstanceError):
        lp.quadrant_flags(g, (2, 3))

    rep = lp.planarity_report(g, with_flags=True)
    assert [e for e, _ in rep.per_edge_flags] == K33


def test_witness_certificate():
    g = lp.make_ladder(3, 3, K33)
    cert = lp.extract_k33_witness(g)
    assert cert.pattern == lp.SubdivisionPattern.k33
    assert {v.name for v in cert.part_x} == {"v2", "u1", "u3"}
    assert {v.name for v in cert.part_y} == {"u2", "v1", "v3"}
    assert len(cert.paths) == 9
    assert lp.verify_certificate(g, cert)

    text = lp.certificate_to_text(cert)
    assert text.startswith("pattern K33\n")
    round_tripped = lp.certificate_from_json(lp.certificate_to_json(cert))
    assert lp.verify_certificate(g, round_tripped)

    k4 = lp.make_ladder(2, 2, K4)
    k4cert = lp.extract_outerplanar_witness(k4)
    assert k4cert.pattern == lp.SubdivisionPattern.k4
    assert k4cert.part_y == []
    assert lp.verify_certificate(k4, k4cert)

    with pytest.raises(lp.NotApplicableError):
        lp.extract_k33_witness(lp.make_ladder(3, 3, LADDER))

    # a certificate is evidence for its own instance only
    assert not lp.verify_certificate(lp.make_ladder(3, 3, LADDER), cert)


def test_planar_embedding():
    g = lp.make_ladder(2, 2, K4)
    emb = lp.planar_embedding(g)
    assert lp.verify_embedding(g, emb)
    assert len(emb.vertices) == 4
    assert len(emb.edges) == 2 + 4  # two path edges, four cross edges

    doc = json.loads(lp.embedding_to_json(emb))
    assert doc["format_version"] == 1
    assert lp.verify_embedding(g, lp.embedding_from_json(lp.embedding_to_json(emb)))

    svg = lp.embedding_to_svg(g, emb)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")

    with pytest.raises(lp.NotPlanarError):
        lp.planar_embedding(lp.make_ladder(3, 3, K33))

    # tampering is caught: collapse one vertex onto another
    emb.vertices[0].p = emb.vertices[1].p
    assert not lp.verify_embedding(g, emb)


def test_outerplanar_embedding():
    g = lp.make_ladder(3, 3, FAN)
    emb = lp.outerplanar_embedding(g)
    assert lp.verify_embedding(g, emb)
    assert all(vp.p.x in (0, 1) for vp in emb.vertices)
    with pytest.raises(lp.NotOuterplanarError):
        lp.outerplanar_embedding(lp.make_ladder(2, 2, K4))


def test_classify_edges():
    classes = dict(lp.classify_edges(lp.make_ladder(3, 3, FAN)))
    assert classes[(3, 1)] == lp.EdgeClass.x
    assert classes[(1, 3)] == lp.EdgeClass.y
    w = dict(lp.classify_edges(lp.make_ladder(3, 3, [(1, 3), (2, 2), (3, 1), (3, 3)])))
    assert w[(2, 2)] == lp.EdgeClass.w
    z = dict(lp.classify_edges(lp.make_ladder(2, 3, [(1, 2), (2, 1), (2, 3)])))
    assert z[(1, 2)] == lp.EdgeClass.z


def test_symmetries():
    g = lp.make_ladder(3, 3, LADDER)
    assert lp.apply_symmetry(g, lp.Symmetry.reverse_g1) == lp.make_ladder(3, 3, FAN)
    for s in (lp.Symmetry.reverse_g1, lp.Symmetry.reverse_g2, lp.Symmetry.swap_sides):
        h = lp.random_instance(99, 4, 5, 7)
        assert lp.apply_symmetry(lp.apply_symmetry(h, s), s) == h
        assert lp.is_planar(lp.apply_symmetry(h, s)) == lp.is_planar(h)


def test_oracle_agreement():
    for seed in range(40):
        m, n = 1 + seed % 4, 1 + (seed // 2) % 4
        g = lp.random_instance(seed, m, n, min(m * n, seed % 6))
        assert lp.is_planar(g) == lp.oracle_is_planar(g)
        assert lp.is_outerplanar(g) == lp.oracle_is_outerplanar(g)
    with pytest.raises(lp.BudgetExceededError):
        lp.oracle_is_planar(lp.make_ladder(3, 3, K33), budget=1)


def test_text_round_trip():
    g = lp.random_instance(7, 5, 4, 9)
    assert lp.parse_instance(lp.serialize_instance(g)) == g
    assert lp.parse_instance("functigraph 3\n2 1 3\n") == lp.from_functigraph([2, 1, 3])
    with pytest.raises(lp.ParseError):
        lp.parse_instance("ladder 3\n")


def test_random_instance_determinism():
    a = lp.random_instance(42, 5, 4, 6)
    b = lp.random_instance(42, 5, 4, 6)
    assert a == b and len(a.cross) == 6
    assert lp.random_instance(43, 5, 4, 6) != a

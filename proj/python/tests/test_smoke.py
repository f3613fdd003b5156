import json
import math

import pytest

import hypertile as ht


def test_check_named_tuples():
    r = ht.check("[4,5,4,5]")
    assert r["condition_a"] and r["pair_deterministic"]
    assert r["verdict"] == "ExistsThm1"
    r = ht.check([5, 3, 4, 3, 3])
    assert not r["condition_a"]
    assert r["condition_a_witness"] == "A: [3,3] and [3,3] appear but [3,3,3] does not"
    assert ht.check("3^7")["angle_sum"] == "7/3"


def test_continuations_of_44():
    assert sorted(ht.continuations("[4,4,4,6]", [4, 4])) == [[4, 4, 4, 6], [4, 4, 6, 4]]


def test_degree3():
    assert ht.classify_degree3("[7,7,7]")[0]
    assert not ht.classify_degree3([7, 7, 8])[0]
    assert ht.classify_degree3([12, 12, 4])[0]


def test_side_length_closed_form():
    l0 = ht.side_length("3^7")
    assert abs(l0 - 2 * math.acosh(math.cos(math.pi / 3) / math.sin(math.pi / 7))) < 1e-10
    assert abs(7 * ht.interior_angle(3, l0) - 2 * math.pi) < 1e-10


def test_build_verify_roundtrip():
    res = ht.build("[4,5,4,5]", 2)
    t = res["tiling"]
    assert res["complete"]
    rep = ht.verify(t)
    assert rep["passed"]
    assert rep["layer_vertex_counts"] == [11, 30, 80]
    doc = ht.to_json(t)
    assert json.loads(doc)["version"] == "hypertile/1"
    back = ht.from_json(doc)
    assert ht.canonical_code(back) == ht.canonical_code(t)
    assert ht.geometric_errors(t)["passed"]
    assert len(ht.coordinates(t)) == t.num_vertices


def test_refusal_and_force():
    with pytest.raises(ht.RefusalError):
        ht.build("[5,3,4,3,3]", 1)
    res = ht.build("[4,3,3,3,4,3]", 2, policy="lex", force=True)
    assert not res["complete"]
    assert res["offending_word"] == [3, 3, 3, 3]


def test_transforms_and_isomorphism():
    t = ht.build("3^7", 3)["tiling"]
    d = ht.dual(t)
    assert d.vertex_type == "[7,7,7]"
    assert ht.verify(d)["passed"]
    s = ht.build("3^7", 3, policy="seed:5")["tiling"]
    assert ht.is_isomorphic(t, s)
    tr = ht.truncate(ht.build("6^4", 2)["tiling"])
    assert tr.vertex_type == "[4,12,12]"


def test_svg_and_stats():
    t = ht.build("[4,4,4,6]", 1, force=True)["tiling"]
    svg = ht.to_svg(t)
    assert svg == ht.to_svg(t)
    assert svg.count("<path") == t.num_faces
    assert ht.layer_stats(t)[0]["faces"] == 4


def test_bad_input():
    with pytest.raises(ht.ParseError):
        ht.check("[4,x]")
    with pytest.raises(ht.SchemaError):
        ht.from_json('{"version": "hypertile/0"}')

import pytest
from fastapi.testclient import TestClient

from suturedpoly.service import create_app

PYRAMID = {
    "dim": 3,
    "points": [[0, 1, 1], [0, 1, 0], [0, 0, 1], [1, 0, 1], [1, 1, 0]],
}

LABELED_PYRAMID = dict(
    PYRAMID,
    labels=[
        {"point": [0, 1, 1], "rank": 1, "is_z": True},
        {"point": [0, 1, 0], "rank": 1, "is_z": True},
        {"point": [0, 0, 1], "rank": 1, "is_z": True},
        {"point": [1, 0, 1], "rank": 1, "is_z": True},
        {"point": [1, 1, 0], "rank": 1, "is_z": True},
    ],
)


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_healthz(client):
    assert client.get("/healthz").json() == {"status": "ok"}


def test_hull_endpoint(client):
    r = client.post("/hull", json={"points": PYRAMID})
    assert r.status_code == 200
    body = r.json()
    assert body["vertex_count"] == 5 and body["affine_dim"] == 3
    assert body["polytope"]["points"][0] == ["0", "0", "1"]


def test_facets_endpoint(client):
    r = client.post("/facets", json={"polytope": PYRAMID})
    assert r.status_code == 200
    assert len(r.json()["facets"]) == 5


def test_facets_endpoint_degenerate_is_422(client):
    r = client.post(
        "/facets", json={"polytope": {"dim": 3, "points": [[0, 0, 0], [1, 1, 1]]}}
    )
    assert r.status_code == 422
    body = r.json()
    assert body["code"] == "not_full_dimensional"
    assert body["details"]["affine_dim"] == 1


def test_dual_cones_endpoint_with_fan(client):
    r = client.post(
        "/dual-cones", json={"polytope": PYRAMID, "fan_samples": 500, "seed": 0}
    )
    assert r.status_code == 200
    body = r.json()
    assert len(body["system"]["cones"]) == 5
    assert body["fan"]["covers"] and body["fan"]["disjoint"]
    sizes = sorted(len(c["rays"]) for c in body["system"]["cones"])
    assert sizes == [3, 3, 3, 3, 4]


def test_foliation_cones_endpoint(client):
    r = client.post("/foliation-cones", json={"polytope": LABELED_PYRAMID})
    assert r.status_code == 200
    body = r.json()
    assert body["selected_labels"] == [0, 1, 2, 3, 4]
    assert not body["hypothesis_warning"]


def test_foliation_cones_requires_labels(client):
    r = client.post("/foliation-cones", json={"polytope": PYRAMID})
    assert r.status_code == 422


def test_support_endpoint(client):
    r = client.post("/support", json={"polytope": PYRAMID, "at": [1, 0, 0]})
    assert r.status_code == 200
    assert r.json() == {"value": 0, "face_vertices": [0, 1, 2], "face_dim": 2}


def test_norm_endpoint_y_centered(client):
    r = client.post(
        "/norm",
        json={"kind": "y", "polytope": PYRAMID, "at": [1, 0, 0], "center": True},
    )
    assert r.status_code == 200
    assert r.json() == {"kind": "y", "value": "2/5"}


def test_norm_endpoint_uncentered_y_is_422(client):
    r = client.post("/norm", json={"kind": "y", "polytope": PYRAMID, "at": [1, 0, 0]})
    assert r.status_code == 422


def test_norm_endpoint_chi(client):
    doc = {"components": [{"chi": 1, "n": 3, "beta": 0}]}
    r = client.post("/norm", json={"kind": "chi-s", "surfaces": doc})
    assert r.json() == {"kind": "chi-s", "value": "1/2"}
    r = client.post(
        "/norm", json={"kind": "c-s-t", "summand": {"chi": -2, "index": "-3/2", "rotation": 1}}
    )
    assert r.json() == {"kind": "c-s-t", "value": "-9/2"}


def test_ball_endpoint(client):
    r = client.post("/ball", json={"polytope": PYRAMID, "center": True})
    assert r.status_code == 200
    body = r.json()
    assert body["bounded"] and len(body["polytope"]["points"]) == 5


def test_ball_endpoint_unbounded(client):
    segment = {"dim": 2, "points": [[-1, -1], [1, 1]]}
    r = client.post("/ball", json={"polytope": segment})
    body = r.json()
    assert not body["bounded"]
    assert len(body["halfspaces"]) == 2


def test_fox_endpoint(client):
    text = (
        "generators: 2\nabelianization: 1\n1\n1\n"
        "x1 x2 x1 x2^-1 x1^-1 x2^-1\n"
    )
    r = client.post("/fox", json={"text": text, "lspace": True})
    assert r.status_code == 200
    body = r.json()
    assert body["polynomial"]["terms"] == [
        {"exp": [0], "coef": 1},
        {"exp": [1], "coef": -1},
        {"exp": [2], "coef": 1},
    ]
    assert not body["hypothesis_warning"]


def test_fox_endpoint_jacobian(client):
    text = "generators: 2\nabelianization: 2\n1 0\n0 1\nx1 x1 x2\nx2 x2 x1\n"
    r = client.post("/fox", json={"text": text, "jacobian": True, "lspace": True})
    assert r.status_code == 200
    assert len(r.json()["newton_polytope"]["points"]) == 4


def test_fox_endpoint_parse_error_is_400(client):
    r = client.post("/fox", json={"text": "garbage"})
    assert r.status_code == 400
    assert r.json()["code"] == "parse_error"


def test_verify_endpoint_scoped(client):
    r = client.post("/verify", json={"example": "pretzel-2-2-2", "seed": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert body["text"].startswith("PASS")


def test_render_endpoint(client):
    r = client.post("/render", json={"target": "cones", "polytope": PYRAMID})
    assert r.status_code == 200
    assert r.json()["svg"].startswith("<svg")


def test_examples_endpoints(client):
    names = [e["name"] for e in client.get("/examples").json()]
    assert names == ["cc-two-component-link", "pretzel-2-2-2", "pretzel-2-4-2"]
    detail = client.get("/examples/cc-two-component-link").json()
    assert detail["provenance"] == "paper"
    assert len(detail["expected_cones"]["cones"]) == 5
    missing = client.get("/examples/nope")
    assert missing.status_code == 422

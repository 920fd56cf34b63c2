import math

import pytest
from fastapi.testclient import TestClient

from src.api.main import create_app

CONSTANT = {"domain": {"kind": "unit", "T": 1.0}, "breaks": [0.0, 1.0], "vals": [1.0]}


@pytest.fixture
def client():
    return TestClient(create_app())


def test_health_ok(client):
    r = client.get("/health")
    assert r.status_code == 200
    data = r.json()
    assert data["status"] == "ok"
    assert data["mesh_start"] > 0


def test_norm_copson_of_constant(client):
    r = client.post("/norms", json={"function": CONSTANT, "norm": "cop", "p": 2.0})
    assert r.status_code == 200
    data = r.json()
    assert data["norm"] == "cop"
    assert data["value"] == pytest.approx(math.sqrt(2.0), rel=1e-10)


def test_norm_bad_mesh_is_400(client):
    payload = {"function": {"breaks": [0.0, 0.5], "vals": [1.0]}, "norm": "l1"}
    r = client.post("/norms", json=payload)
    assert r.status_code == 400


def test_norm_divergence_is_422(client):
    r = client.post("/norms", json={"function": CONSTANT, "norm": "identity", "p": 1.0})
    assert r.status_code == 422


def test_kcurve_closed_form(client):
    payload = {
        "function": CONSTANT,
        "couple": {"kind": "weighted_l1", "w0": "one", "w1": "inv_t"},
        "t_min": 0.5,
        "t_max": 1.0,
        "points_per_decade": 4,
    }
    r = client.post("/kcurve", json=payload)
    assert r.status_code == 200
    data = r.json()
    assert data["method"] == "closed_form"
    first = data["rows"][0]
    assert first["t"] == pytest.approx(0.5)
    assert first["K"] == pytest.approx(0.5 + 0.5 * math.log(2.0))


def test_kcurve_missing_weights_is_400(client):
    payload = {"function": CONSTANT, "couple": {"kind": "weighted_l1"}}
    r = client.post("/kcurve", json=payload)
    assert r.status_code == 400


def test_kcurve_lp_carries_band_bounds(client):
    payload = {
        "function": CONSTANT,
        "couple": {"kind": "ces1_cesinf_unit"},
        "method": "lp",
        "t_min": 0.1,
        "t_max": 1.0,
        "points_per_decade": 2,
        "mesh_n": 32,
    }
    r = client.post("/kcurve", json=payload)
    assert r.status_code == 200
    for row in r.json()["rows"]:
        if row["t"] < 1.0:
            assert row["lower_bound"] * (1 - 1e-6) <= row["K"] <= row["upper_bound"] * (1 + 1e-6)


def test_verify_identities(client):
    payload = {"suite": "identities", "corpus": {"count": 2, "max_pieces": 6}}
    r = client.post("/verify", json=payload)
    assert r.status_code == 200
    data = r.json()
    assert data["suite"] == "identities"
    assert data["passed"] is True
    assert data["assertions"]


def test_verify_unknown_suite_is_400(client):
    r = client.post("/verify", json={"suite": "nope"})
    assert r.status_code == 400

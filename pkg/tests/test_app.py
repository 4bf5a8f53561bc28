import pytest
from fastapi.testclient import TestClient

from app import app


@pytest.fixture
def client():
    return TestClient(app)


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json() == {"message": "Trig Fourier Lab API is running"}


def test_kernel_endpoint(client):
    body = client.get("/kernels/alpha", params={"n": 4, "s": 1}).json()
    assert body == {"kind": "alpha", "n": 4, "s": 1, "mode": "closed", "value": 8}
    brute = client.get("/kernels/alpha-prime", params={"n": 5, "s": 2, "brute": True}).json()
    closed = client.get("/kernels/alpha-prime", params={"n": 5, "s": 2}).json()
    assert brute["mode"] == "brute"
    assert brute["value"] == closed["value"]


def test_kernel_domain_error_is_400(client):
    response = client.get("/kernels/alpha", params={"n": 0, "s": 0})
    assert response.status_code == 400
    assert "n" in response.json()["detail"]
    assert client.get("/kernels/beta", params={"n": 3, "s": 1}).status_code == 422


def test_multiple_angle_endpoint(client):
    body = client.get("/multiple-angle/sin", params={"n": 3}).json()
    assert body["label"] == "sin(3t)"
    assert body["coeffs"] == {"1": "3", "3": "-4"}
    assert body["cos_cofactor"] is False
    assert client.get("/multiple-angle/cos", params={"n": 0}).status_code == 400


def test_power_fourier_endpoint(client):
    body = client.get("/power-fourier/cos", params={"n": 4}).json()
    assert body["label"] == "cos^4(t)"
    assert body["constant"] == "3/8"
    assert body["cos"] == {"2": "1/2", "4": "1/8"}
    assert body["sin"] == {}


def test_reciprocal_endpoint(client):
    body = client.post("/reciprocal", json={"a": 2.0, "terms": 3}).json()
    assert body["target"] == "cos"
    assert body["N"] == 3
    assert len(body["cos"]) == 3
    assert body["cos"][0] == pytest.approx(0.3094010767585, rel=1e-12)
    sin_body = client.post("/reciprocal", json={"a": 2.0, "terms": 2, "target": "sin"}).json()
    assert sin_body["sin"][0] == pytest.approx(0.3094010767585, rel=1e-12)
    assert sin_body["cos"][1] == pytest.approx(-0.0829037, rel=1e-6)


def test_reciprocal_rejects_bad_input(client):
    assert client.post("/reciprocal", json={"a": 0.5}).status_code == 400
    assert client.post("/reciprocal", json={"a": 2.0, "target": "tan"}).status_code == 422
    assert client.post("/reciprocal", json={"a": 2.0, "terms": -1}).status_code == 422


def test_reciprocal_check_endpoint(client):
    body = client.post("/reciprocal/check", json={"a": 1.5, "terms": 10}).json()
    assert body["harmonics_checked"] == 10
    assert body["samples_used"] == 4096
    assert body["max_abs_error"] <= 1e-9


def test_verify_endpoint(client):
    body = client.post("/verify", json={"suite": "fixtures"}).json()
    assert body["suite"] == "fixtures"
    assert body["passed"] is True
    assert body["checks"]
    assert client.post("/verify", json={"suite": "nonsense"}).status_code == 400


def test_cache_endpoints(client, fresh_cache):
    client.get("/multiple-angle/cos", params={"n": 6})
    stats = client.get("/cache/stats").json()
    assert stats["entries"] >= 0
    removed = client.delete("/cache").json()["removed"]
    assert removed == stats["entries"]
    assert client.get("/cache/stats").json()["entries"] == 0

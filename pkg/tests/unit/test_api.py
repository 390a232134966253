"""
Unit Tests - HTTP API.
"""

import pytest


@pytest.mark.unit
def test_health(api_client):
    """Test health endpoint reports status and environment."""
    response = api_client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


@pytest.mark.unit
def test_root_lists_guards(api_client):
    """Test root endpoint lists the active guards."""
    payload = api_client.get("/").json()
    assert payload["app"] == "Unitary Cayley"
    assert payload["guards"]["wl_max_n"] == 128


@pytest.mark.unit
def test_spectrum(api_client):
    """Test spectrum endpoint for X_12."""
    response = api_client.get("/spectrum/12")
    assert response.status_code == 200
    assert response.json() == {"n": 12, "pairs": [[-4, 1], [-2, 2], [0, 6], [2, 2], [4, 1]]}


@pytest.mark.unit
def test_spectrum_invalid_n(api_client):
    """Test spectrum endpoint rejects n = 0 with 422."""
    response = api_client.get("/spectrum/0")
    assert response.status_code == 422
    assert "n must be >= 1" in response.json()["detail"]


@pytest.mark.unit
def test_charpoly(api_client):
    """Test charpoly endpoint returns factored form and coefficients."""
    payload = api_client.get("/charpoly/3").json()
    assert payload == {"n": 3, "factored": "(x-2)*(x+1)^2", "coefficients": [-2, -3, 0, 1]}


@pytest.mark.unit
def test_minpoly(api_client):
    """Test minpoly endpoint for X_9."""
    payload = api_client.get("/minpoly/9").json()
    assert payload["factored"] == "x*(x-6)*(x+3)"
    assert payload["degree"] == 3


@pytest.mark.unit
def test_det(api_client):
    """Test det endpoint returns determinant and nullity."""
    assert api_client.get("/det/12").json() == {"n": 12, "det": 0, "nullity": 6}
    assert api_client.get("/det/10").json()["det"] == -16


@pytest.mark.unit
def test_check(api_client):
    """Test check endpoint verdict for the crown property."""
    payload = api_client.get("/check/10/crown").json()
    assert payload["brute_force"] is True
    assert payload["agree"] is True
    assert payload["characterization"] == "n = 2p, p odd prime"


@pytest.mark.unit
def test_check_unknown_property(api_client):
    """Test unknown property is rejected."""
    assert api_client.get("/check/10/planar").status_code == 422


@pytest.mark.unit
def test_check_n_too_small(api_client):
    """Test check endpoint rejects n = 1."""
    assert api_client.get("/check/1/dr").status_code == 422


@pytest.mark.unit
def test_basis(api_client):
    """Test basis endpoint lists labelled members."""
    payload = api_client.get("/basis/4").json()
    assert payload == {
        "n": 4,
        "members": [
            {"label": "I", "connection_set": [0]},
            {"label": "H_1", "connection_set": [1, 3]},
            {"label": "H_2 - I", "connection_set": [2]},
        ],
    }


@pytest.mark.unit
def test_pattern_polynomial_report(api_client):
    """Test pattern-polynomial report passes for X_12."""
    payload = api_client.get("/verify/12").json()
    assert payload["pass"] is True
    assert payload["dim_wl"] == 5
    assert len(payload["basis"]) == 5


@pytest.mark.unit
def test_pattern_polynomial_guard(api_client):
    """Test pattern-polynomial endpoint above the WL guard."""
    response = api_client.get("/verify/500")
    assert response.status_code == 422
    assert "exceeds guard" in response.json()["detail"]

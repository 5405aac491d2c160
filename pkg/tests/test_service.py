import pytest
from fastapi.testclient import TestClient

from mzvstar import __version__
from mzvstar.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


SMALL_CONFIG = {"trunc": 2_000, "tolerance": 1e-4}


class TestMeta:
    def test_health(self, client):
        body = client.get("/health").json()
        assert body == {"status": "ok", "version": __version__}

    def test_default_config(self, client):
        body = client.get("/config").json()
        assert body["prec_bits"] == 128
        assert body["trunc"] == 100_000

    def test_identities_listing(self, client):
        body = client.get("/identities").json()
        assert "theorem1" in body["identities"]
        assert "lemma1" in body["identities"]


class TestEval:
    def test_mzv(self, client):
        response = client.post("/eval", json={"kind": "mzv", "index": "1,2"})
        assert response.status_code == 200
        body = response.json()
        assert body["value"].startswith("1.2020569031595942")
        assert body["bound"] < 1e-9
        assert body["config"]["prec_bits"] == 128

    def test_zeta_with_list_index(self, client):
        body = client.post("/eval", json={"kind": "zeta", "index": [2]}).json()
        assert body["value"].startswith("1.644934066848226")

    def test_mzsv(self, client):
        body = client.post(
            "/eval", json={"kind": "mzsv", "index": "1,2", "config": SMALL_CONFIG}
        ).json()
        assert body["value"].startswith("2.404")

    def test_divergent_is_domain_error(self, client):
        response = client.post("/eval", json={"kind": "mzv", "index": "2,1"})
        assert response.status_code == 422
        assert response.json()["kind"] == "domain"

    def test_zeta_wants_depth_one(self, client):
        response = client.post("/eval", json={"kind": "zeta", "index": "1,2"})
        assert response.status_code == 422

    def test_malformed_body(self, client):
        response = client.post("/eval", json={"kind": "nope", "index": "2"})
        assert response.status_code == 422

    def test_unreachable_tolerance_is_accuracy_error(self, client):
        response = client.post(
            "/eval",
            json={
                "kind": "mzv",
                "index": "1,2",
                "config": {"trunc": 100, "tolerance": 1e-40, "max_trunc": 100},
            },
        )
        assert response.status_code == 422
        assert response.json()["kind"] == "accuracy"


class TestReg:
    def test_star_shuffle(self, client):
        body = client.post("/reg", json={"flavor": "star-sh", "index": "2,1"}).json()
        assert body["symbolic"] == "(ζ(2))·T + (-ζ(1,2))"
        powers = {c["power"]: c for c in body["coefficients"]}
        assert powers[1]["value"].startswith("1.6449")
        assert powers[0]["value"].startswith("-1.2020")

    def test_shuffle_alias(self, client):
        body = client.post("/reg", json={"flavor": "shuffle", "index": "2,1"}).json()
        assert "-2·ζ(1,2)" in body["symbolic"]

    def test_harm_of_one_is_T(self, client):
        body = client.post("/reg", json={"flavor": "harm", "index": "1"}).json()
        assert body["symbolic"] == "(1)·T"

    def test_series_order_too_low(self, client):
        response = client.post(
            "/reg", json={"flavor": "star-sh", "index": "2,1,1", "series_order": 0}
        )
        assert response.status_code == 422
        assert response.json()["kind"] == "capacity"


class TestVerify:
    def test_theorem1(self, client):
        body = client.post(
            "/verify", json={"identity": "theorem1", "params": {"index": "1,2"}}
        ).json()
        assert body["pass"] is True
        assert body["max_deviation"] <= body["bound"]

    def test_exact_identity(self, client):
        body = client.post(
            "/verify", json={"identity": "remark-bell", "params": {"r": 5}}
        ).json()
        assert body["pass"] is True and body["exact"] is True

    def test_unknown_identity(self, client):
        response = client.post("/verify", json={"identity": "nope", "params": {}})
        assert response.status_code == 422
        assert response.json()["kind"] == "domain"

    def test_capacity_surfaces(self, client):
        response = client.post(
            "/verify", json={"identity": "theorem1", "params": {"index": "1,1,1,1,1,2"}}
        )
        assert response.status_code == 422
        assert response.json()["kind"] == "capacity"


class TestTableAndSuite:
    def test_table(self, client):
        body = client.post(
            "/table", json={"k_values": [2], "l_values": [2], "config": SMALL_CONFIG}
        ).json()
        assert body["failed"] == 0
        displays = {row["params"]["display"] for row in body["rows"]}
        assert displays == {1, 2, 3}

    def test_small_suite(self, client):
        body = client.post(
            "/suite",
            json={"max_weight": 2, "max_depth": 2, "k_values": [2], "l_values": [2]},
        ).json()
        assert body["failed"] == 0
        assert body["passed"] == len(body["reports"])


class TestPartitionsAndBell:
    def test_partitions_by_elements(self, client):
        body = client.post("/partitions", json={"elements": [1, 2, 3]}).json()
        assert body["count"] == 5
        assert {entry["text"] for entry in body["partitions"]} == {
            "123", "12|3", "13|2", "1|23", "1|2|3",
        }

    def test_partitions_restricted(self, client):
        body = client.post(
            "/partitions", json={"elements": [1, 2, 3], "not_inside": [3, 4]}
        ).json()
        assert {entry["text"] for entry in body["partitions"]} == {"123", "13|2", "1|23"}

    def test_partitions_by_size(self, client):
        body = client.post("/partitions", json={"size": 4}).json()
        assert body["count"] == 15

    def test_partitions_bad_request(self, client):
        assert client.post("/partitions", json={}).status_code == 422
        assert (
            client.post("/partitions", json={"size": 3, "elements": [1]}).status_code
            == 422
        )

    def test_bell_kinds(self, client):
        def bell(payload):
            response = client.post("/bell", json=payload)
            assert response.status_code == 200, response.json()
            return response.json()["value"]

        assert bell({"kind": "partial", "r": 4, "k": 2, "xs": ["1", "1", "1"]}) == "7"
        assert bell({"kind": "complete", "r": 4, "xs": ["1", "1", "2", "6"]}) == "24"
        assert bell({"kind": "stirling1", "r": 3, "k": 2}) == "3"
        assert bell({"kind": "stirling2", "r": 4, "k": 2}) == "7"
        assert bell({"kind": "shape-count", "r": 4, "k": 2, "shape": [1, 0, 1]}) == "4"
        assert bell({"kind": "bell-number", "r": 5}) == "52"
        assert bell({"kind": "partial", "r": 4, "k": 2, "xs": ["1", "1/2", "1/6"]}) == "17/12"

    def test_bell_missing_arguments(self, client):
        assert client.post("/bell", json={"kind": "partial", "r": 4}).status_code == 422
        assert client.post("/bell", json={"kind": "complete", "r": 2}).status_code == 422


class TestCacheEndpoints:
    def test_save_then_load(self, client, tmp_path):
        client.post(
            "/eval", json={"kind": "zeta", "index": "2", "config": SMALL_CONFIG}
        )
        path = str(tmp_path / "cache.json")
        saved = client.post("/cache/save", json={"path": path, "config": SMALL_CONFIG}).json()
        assert saved["entries"] >= 1
        loaded = client.post("/cache/load", json={"path": path, "config": SMALL_CONFIG}).json()
        assert loaded["entries"] == saved["entries"]

"""HTTP API: the document store, concurrency rules, and wire shapes."""
import pytest
from fastapi.testclient import TestClient

from coreograph import enumerate_trails, map_to_graph, builtin_map
from coreograph.api import DocumentStore, create_app


@pytest.fixture
def client():
    return TestClient(create_app(DocumentStore()))


def make_doc(client, atlas_name):
    payload = client.get(f"/atlas/{atlas_name}").json()["payload"]
    r = client.post("/docs", json=payload)
    assert r.status_code == 201
    return r.json()["doc_id"], r.json()["revision"]


class TestAtlas:
    def test_index_lists_everything(self, client):
        doc = client.get("/atlas").json()
        assert doc["maps"] == [
            "fig2_bottom_left", "fig2_bottom_right",
            "koenigsberg", "leiden", "mathigon2",
        ]
        assert len(doc["schemas"]) == 12

    def test_entry_carries_payload_and_verdict(self, client):
        r = client.get("/atlas/koenigsberg")
        assert r.status_code == 200
        doc = r.json()
        assert doc["kind"] == "map"
        assert doc["classification"]["type"] == "III"
        assert len(doc["payload"]["bridges"]) == 7

    def test_unknown_entry_is_404(self, client):
        r = client.get("/atlas/nowhere")
        assert r.status_code == 404
        assert r.json()["code"] == "unknown_name"

    def test_identical_requests_return_identical_bytes(self, client):
        a = client.get("/atlas/GC1")
        b = client.get("/atlas/GC1")
        assert a.content == b.content


class TestDocuments:
    def test_create_and_fetch_a_schema(self, client):
        doc_id, rev = make_doc(client, "GC1")
        assert doc_id == "doc-1" and rev == 1
        r = client.get(f"/docs/{doc_id}")
        body = r.json()
        assert body["kind"] == "schema"
        assert body["revision"] == 1
        assert body["payload"]["styles"]["1"] == "step"

    def test_create_a_map(self, client):
        doc_id, _ = make_doc(client, "koenigsberg")
        assert client.get(f"/docs/{doc_id}").json()["kind"] == "map"

    def test_bare_graphs_are_dressed_as_schemas(self, client):
        r = client.post(
            "/docs",
            json={
                "vertices": [{"id": "A"}, {"id": "B"}],
                "edges": [{"id": 1, "ends": ["A", "B"]}],
            },
        )
        assert r.status_code == 201
        body = client.get(f"/docs/{r.json()['doc_id']}").json()
        assert body["kind"] == "schema"
        assert set(body["payload"]["positions"]) == {"A", "B"}

    def test_ids_are_sequential(self, client):
        a, _ = make_doc(client, "GC1")
        b, _ = make_doc(client, "GC2")
        assert (a, b) == ("doc-1", "doc-2")

    def test_unknown_document_is_404(self, client):
        r = client.get("/docs/doc-99")
        assert r.status_code == 404
        assert r.json()["code"] == "unknown_document"

    def test_unusable_payload_is_422(self, client):
        r = client.post("/docs", json={"nothing": True})
        assert r.status_code == 422
        assert r.json()["code"] == "invalid_document"


class TestMutation:
    def test_edit_bumps_revision_and_reclassifies(self, client):
        doc_id, rev = make_doc(client, "GC3")
        r = client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "add", "add": ["A", "B"]}},
        )
        assert r.status_code == 200
        body = r.json()
        assert body["revision"] == 2
        assert body["classification"]["type"] == "II"

    def test_mutation_answer_matches_a_fresh_read(self, client):
        doc_id, rev = make_doc(client, "GC3")
        patched = client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "add", "add": ["A", "B"]}},
        ).json()
        fresh = client.get(f"/docs/{doc_id}/classification").json()
        assert fresh["revision"] == patched["revision"]
        assert fresh["classification"] == patched["classification"]

    def test_stale_revision_is_409(self, client):
        doc_id, rev = make_doc(client, "GC3")
        edit = {"kind": "add", "add": ["A", "B"]}
        assert (
            client.patch(
                f"/docs/{doc_id}", json={"revision": rev, "edit": edit}
            ).status_code
            == 200
        )
        r = client.patch(f"/docs/{doc_id}", json={"revision": rev, "edit": edit})
        assert r.status_code == 409
        assert r.json()["code"] == "revision_conflict"

    def test_conflicts_leave_the_document_alone(self, client):
        doc_id, rev = make_doc(client, "GC3")
        before = client.get(f"/docs/{doc_id}").json()
        r = client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev + 5, "edit": {"kind": "add", "add": ["A", "B"]}},
        )
        assert r.status_code == 409
        assert client.get(f"/docs/{doc_id}").json() == before

    def test_disconnecting_edits_are_refused(self, client):
        doc_id, rev = make_doc(client, "C3")  # the path A-B-C-D
        r = client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "remove", "remove": 2}},
        )
        assert r.status_code == 422
        assert r.json()["code"] == "disconnects"
        # the end edge only strands a dancer, the floor stays in one piece
        r = client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "remove", "remove": 1}},
        )
        assert r.status_code == 200

    def test_added_steps_take_a_style(self, client):
        doc_id, rev = make_doc(client, "GC1")
        r = client.patch(
            f"/docs/{doc_id}",
            json={
                "revision": rev,
                "edit": {"kind": "add", "add": ["B", "E"]},
                "style": "dip",
            },
        )
        assert r.status_code == 200
        payload = client.get(f"/docs/{doc_id}").json()["payload"]
        assert payload["styles"]["7"] == "dip"

    def test_removed_steps_drop_their_style(self, client):
        doc_id, rev = make_doc(client, "GC2")
        client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "remove", "remove": 1}},
        )
        payload = client.get(f"/docs/{doc_id}").json()["payload"]
        assert "1" not in payload["styles"]

    def test_maps_can_be_edited_and_keep_their_polygons(self, client):
        doc_id, rev = make_doc(client, "koenigsberg")
        r = client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "add", "add": ["B", "C"]}},
        )
        assert r.status_code == 200
        assert r.json()["classification"]["type"] == "II"
        payload = client.get(f"/docs/{doc_id}").json()["payload"]
        assert len(payload["bridges"]) == 8
        assert "polygon" in payload["regions"][0]

    def test_unknown_edit_kind_is_422(self, client):
        doc_id, rev = make_doc(client, "GC1")
        r = client.patch(
            f"/docs/{doc_id}", json={"revision": rev, "edit": {"kind": "paint"}}
        )
        assert r.status_code == 422


class TestTrails:
    def test_single_trail_with_styles_and_beats(self, client):
        doc_id, _ = make_doc(client, "GC1")
        r = client.post(f"/docs/{doc_id}/trails", json={})
        body = r.json()
        assert body["count"] == 1
        entry = body["trails"][0]
        assert entry["trail"] == "B1A5E4D3C2B6E"
        assert entry["styles"][0] == "step"
        assert entry["beats"] == [0, 1, 2, 3, 4, 5]
        assert body["classification"]["type"] == "II"

    def test_map_trails_have_no_dressing(self, client):
        doc_id, _ = make_doc(client, "fig2_bottom_left")
        entry = client.post(f"/docs/{doc_id}/trails", json={}).json()["trails"][0]
        assert "styles" not in entry and "beats" not in entry
        assert entry["is_circuit"] is True

    def test_enumerate_all_with_limit(self, client):
        doc_id, _ = make_doc(client, "GC1")
        body = client.post(
            f"/docs/{doc_id}/trails", json={"all": True, "limit": 3}
        ).json()
        assert body["count"] == 12
        assert len(body["trails"]) == 3

    def test_enumeration_count_matches_the_library(self, client):
        doc_id, _ = make_doc(client, "fig2_bottom_left")
        body = client.post(f"/docs/{doc_id}/trails", json={"all": True}).json()
        expected = enumerate_trails(map_to_graph(builtin_map("fig2_bottom_left")))
        assert body["count"] == len(expected)

    def test_blocked_graph_returns_an_empty_list(self, client):
        doc_id, _ = make_doc(client, "koenigsberg")
        body = client.post(f"/docs/{doc_id}/trails", json={}).json()
        assert body["count"] == 0 and body["trails"] == []
        assert body["classification"]["type"] == "III"

    def test_start_validation(self, client):
        doc_id, _ = make_doc(client, "GC1")
        r = client.post(f"/docs/{doc_id}/trails", json={"start": "Z"})
        assert r.status_code == 422 and r.json()["code"] == "unknown_vertex"
        r = client.post(f"/docs/{doc_id}/trails", json={"start": "A"})
        assert r.status_code == 422 and r.json()["code"] == "infeasible_start"

    def test_beats_per_step(self, client):
        doc_id, _ = make_doc(client, "GC1")
        body = client.post(
            f"/docs/{doc_id}/trails", json={"beats_per_step": 2}
        ).json()
        assert body["trails"][0]["beats"] == [0, 2, 4, 6, 8, 10]


class TestEditSearch:
    def test_search_over_http_matches_the_cli_numbers(self, client):
        doc_id, _ = make_doc(client, "koenigsberg")
        body = client.post(f"/docs/{doc_id}/edits?op=add&target=II").json()
        assert body["count"] == 6
        assert all(p["resulting_type"] == "II" for p in body["proposals"])

    def test_bad_parameters_are_422(self, client):
        doc_id, _ = make_doc(client, "koenigsberg")
        assert client.post(f"/docs/{doc_id}/edits?op=add&target=IV").status_code == 422
        assert client.post(f"/docs/{doc_id}/edits?op=swap&target=I").status_code == 422


class TestValidateEndpoint:
    def test_against_a_stored_document(self, client):
        doc_id, _ = make_doc(client, "GC1")
        r = client.post("/validate", json={"trail": "B6E5A1B2C3D4E", "doc_id": doc_id})
        assert r.status_code == 200
        assert r.json()["status"] == "eulerian"

    def test_against_an_atlas_reference(self, client):
        r = client.post(
            "/validate",
            json={"trail": "A1D6C5B4A3B2A", "doc_id": "atlas:fig2_bottom_left"},
        )
        assert r.json()["status"] == "eulerian"
        assert r.json()["is_circuit"] is True

    def test_malformed_trail_is_422(self, client):
        doc_id, _ = make_doc(client, "GC1")
        r = client.post("/validate", json={"trail": "B01E", "doc_id": doc_id})
        assert r.status_code == 422
        assert r.json()["code"] == "malformed_trail_string"

    def test_unknown_document_is_404(self, client):
        r = client.post("/validate", json={"trail": "A1B", "doc_id": "doc-9"})
        assert r.status_code == 404


class TestReadOnlyMode:
    def test_reads_work_and_writes_are_403(self):
        store = DocumentStore()
        store.create({"vertices": [{"id": "A"}], "edges": []})
        client = TestClient(create_app(store, atlas_readonly=True))
        assert client.get("/atlas").status_code == 200
        assert client.get("/docs/doc-1").status_code == 200
        r = client.post("/docs", json={"vertices": [], "edges": []})
        assert r.status_code == 403 and r.json()["code"] == "read_only"
        r = client.patch(
            "/docs/doc-1", json={"revision": 1, "edit": {"kind": "add", "add": []}}
        )
        assert r.status_code == 403


class TestPersistence:
    def test_documents_survive_a_restart(self, tmp_path):
        snapshot = tmp_path / "docs.json"
        store = DocumentStore(persist=snapshot)
        client = TestClient(create_app(store))
        doc_id, rev = make_doc(client, "GC3")
        client.patch(
            f"/docs/{doc_id}",
            json={"revision": rev, "edit": {"kind": "add", "add": ["A", "B"]}},
        )
        before = client.get(f"/docs/{doc_id}").json()

        reborn = TestClient(create_app(DocumentStore(persist=snapshot)))
        after = reborn.get(f"/docs/{doc_id}").json()
        assert after == before
        assert after["revision"] == 2

    def test_id_sequence_continues_after_reload(self, tmp_path):
        snapshot = tmp_path / "docs.json"
        client = TestClient(create_app(DocumentStore(persist=snapshot)))
        make_doc(client, "GC1")

        reborn = TestClient(create_app(DocumentStore(persist=snapshot)))
        doc_id, _ = make_doc(reborn, "GC2")
        assert doc_id == "doc-2"


def test_cors_headers_are_present(client):
    r = client.get("/atlas", headers={"Origin": "http://localhost:5173"})
    assert r.headers.get("access-control-allow-origin") == "*"

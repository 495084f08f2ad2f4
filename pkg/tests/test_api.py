import pytest
from fastapi.testclient import TestClient

from routegraph.serialization import serialize_graph
from routegraph.service import GraphStore, normalize_result, run_algorithm, AlgorithmRequest
from routegraph.service.api import create_app
from routegraph.fixtures import FIXTURES


@pytest.fixture
def client(tmp_path):
    store = GraphStore(tmp_path / "data")
    with TestClient(create_app(store)) as c:
        c.store = store
        yield c


def post_fixture(client, name):
    response = client.post("/graphs", json=serialize_graph(FIXTURES[name]()))
    assert response.status_code == 201
    return response.json()["id"]


def test_healthz(client):
    assert client.get("/healthz").json() == {"status": "ok"}


def test_create_and_get_graph(client, triangle):
    gid = post_fixture(client, "triangle")
    assert client.get(f"/graphs/{gid}").json() == serialize_graph(triangle)


def test_get_unknown_graph_404(client):
    assert client.get("/graphs/nope").status_code == 404


def test_put_upserts(client, triangle, path3):
    body = serialize_graph(triangle)
    assert client.put("/graphs/demo", json=body).status_code == 201
    assert client.put("/graphs/demo", json=serialize_graph(path3)).status_code == 200
    assert client.get("/graphs/demo").json() == serialize_graph(path3)


def test_malformed_graph_body_400(client):
    response = client.post("/graphs", content=b"{ not json",
                           headers={"content-type": "application/json"})
    assert response.status_code == 400
    assert client.post("/graphs", json={"nodes": "x", "edges": []}).status_code == 400


def test_node_crud_and_persistence(client, tmp_path):
    gid = post_fixture(client, "triangle")
    created = client.post(f"/graphs/{gid}/nodes", json={"x": 10, "y": 20, "label": "dep"})
    assert created.status_code == 201
    node = created.json()
    assert node == {"id": 3, "x": 10.0, "y": 20.0, "label": "dep"}

    moved = client.patch(f"/graphs/{gid}/nodes/3", json={"x": 11, "y": 21})
    assert moved.status_code == 200
    assert moved.json()["x"] == 11.0

    relabeled = client.patch(f"/graphs/{gid}/nodes/3", json={"label": "post"})
    assert relabeled.json()["label"] == "post"

    # mutation was persisted before the response
    assert client.store.get(gid).node(3).label == "post"
    reloaded = GraphStore(client.store.root)
    assert reloaded.get(gid).node(3).x == 11.0

    assert client.delete(f"/graphs/{gid}/nodes/3").status_code == 204
    assert client.get(f"/graphs/{gid}").json()["nodes"] == serialize_graph(FIXTURES["triangle"]())["nodes"]


def test_patch_absent_node_404(client):
    gid = post_fixture(client, "triangle")
    assert client.patch(f"/graphs/{gid}/nodes/5", json={"x": 1, "y": 2}).status_code == 404


def test_edge_create_with_default_weight(client):
    gid = post_fixture(client, "triangle")
    response = client.post(f"/graphs/{gid}/edges", json={"u": 0, "v": 1})
    assert response.status_code == 201
    assert response.json()["weight"] == pytest.approx(100.0)  # Euclidean default


def test_self_loop_edge_409(client):
    gid = post_fixture(client, "triangle")
    assert client.post(f"/graphs/{gid}/edges", json={"u": 1, "v": 1}).status_code == 409


def test_negative_weight_409(client):
    gid = post_fixture(client, "triangle")
    body = {"u": 0, "v": 1, "weight": -3}
    assert client.post(f"/graphs/{gid}/edges", json=body).status_code == 409


def test_delete_unknown_edge_404(client):
    gid = post_fixture(client, "triangle")
    assert client.delete(f"/graphs/{gid}/edges/99").status_code == 404


def test_run_waypoint_route(client):
    gid = post_fixture(client, "triangle")
    response = client.post(f"/graphs/{gid}/run",
                           json={"algorithm": "floyd_route", "waypoints": [0, 1, 2]})
    assert response.status_code == 200
    assert response.json()["cost"] == 3.0


def test_run_disconnected_422(client, triangle):
    gid = post_fixture(client, "triangle")
    client.post(f"/graphs/{gid}/nodes", json={"x": 900, "y": 900})
    response = client.post(f"/graphs/{gid}/run", json={"algorithm": "prim"})
    assert response.status_code == 422


def test_run_euler_on_odd_graph_422(client):
    gid = post_fixture(client, "path3")
    # chinese_postman handles odd degrees; christofides on 2 targets fails
    response = client.post(f"/graphs/{gid}/run", json={"algorithm": "dijkstra"})
    assert response.status_code == 400  # missing source

    response = client.post(f"/graphs/{gid}/run", json={"algorithm": "dijkstra", "source": 9})
    assert response.status_code == 404  # unknown node


def test_run_unknown_algorithm_400(client):
    gid = post_fixture(client, "triangle")
    assert client.post(f"/graphs/{gid}/run", json={"algorithm": "warp"}).status_code == 400


def test_run_matches_direct_call(client, koenigsberg):
    gid = post_fixture(client, "koenigsberg")
    response = client.post(f"/graphs/{gid}/run",
                           json={"algorithm": "chinese_postman", "depot": 0})
    direct = run_algorithm(koenigsberg, AlgorithmRequest("chinese_postman", depot=0))
    assert normalize_result(response.json()) == normalize_result(direct)


def test_run_uses_snapshot_not_later_edits(client):
    gid = post_fixture(client, "triangle")
    before = client.post(f"/graphs/{gid}/run", json={"algorithm": "prim"}).json()
    client.post(f"/graphs/{gid}/nodes", json={"x": 5, "y": 5})
    client.post(f"/graphs/{gid}/edges", json={"u": 0, "v": 3, "weight": 0.1})
    after = client.post(f"/graphs/{gid}/run", json={"algorithm": "prim"}).json()
    assert before["cost"] == 3.0
    assert after["cost"] == pytest.approx(3.1)


def test_overlay_served_verbatim(client, tmp_path):
    payload = bytes.fromhex(
        "89504e470d0a1a0a0000000d49484452000000010000000108060000001f15c489"
        "0000000a49444154789c63000100000500010d0a2db40000000049454e44ae426082"
    )
    (client.store.root / "map.png").write_bytes(payload)
    doc = {
        "overlay": {"image_path": "map.png", "width": 1, "height": 1},
        "nodes": [{"id": 0, "x": 0.5, "y": 0.5}],
        "edges": [],
    }
    response = client.post("/graphs", json=doc)
    gid = response.json()["id"]
    got = client.get(f"/graphs/{gid}/overlay")
    assert got.status_code == 200
    assert got.content == payload
    assert got.headers["content-type"] == "image/png"


def test_overlay_missing_404(client):
    gid = post_fixture(client, "triangle")
    assert client.get(f"/graphs/{gid}/overlay").status_code == 404

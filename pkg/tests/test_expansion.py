import networkx as nx
import pytest

from degdiam import Diagram, DiagramEdge, InputError, build_pod, build_tree, expand, internal_count, pending_count
from degdiam.expansion import expected_order


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


def closed_form_pod(delta, beta):
    if beta % 2 == 0:
        return (delta * (delta - 1) ** ((beta - 2) // 2) - 2) // (delta - 2)
    return (2 * (delta - 1) ** ((beta - 1) // 2) - 2) // (delta - 2)


@pytest.mark.parametrize("delta", range(3, 11))
@pytest.mark.parametrize("beta", range(2, 10))
def test_pod_structure(delta, beta):
    pod = build_pod(delta, beta)
    assert pod.internal_count == closed_form_pod(delta, beta) == internal_count(delta, beta)
    h = nx_graph(pod.graph)
    top, bottom = pod.roots
    assert h.degree(top) == h.degree(bottom) == 1
    assert nx.shortest_path_length(h, top, bottom) == beta
    dt = nx.single_source_shortest_path_length(h, top)
    db = nx.single_source_shortest_path_length(h, bottom)
    # every vertex lies on a root-to-root path of length beta (a vein)
    assert all(dt[v] + db[v] == beta for v in h)
    assert max(d for _, d in h.degree()) <= delta


def leaf_count_by_levels(delta, gamma):
    return sum((delta - 1) ** t for t in range(gamma))


@pytest.mark.parametrize("delta,gamma", [(3, 1), (3, 4), (6, 2), (10, 3)])
def test_tree_structure(delta, gamma):
    t = build_tree(delta, gamma)
    h = nx_graph(t.graph)
    assert t.graph.vertex_count - 1 == pending_count(delta, gamma) == leaf_count_by_levels(delta, gamma)
    assert nx.is_tree(h)
    depth = nx.single_source_shortest_path_length(h, t.root)
    assert sorted(t.leaves) == sorted(v for v, d in depth.items() if d == gamma)
    assert all(h.degree(v) == delta for v, d in depth.items() if 0 < d < gamma)


def test_small_fragments():
    assert build_tree(6, 2).graph.vertex_count == 7
    assert build_pod(6, 4).internal_count == 7
    assert build_pod(3, 5).internal_count == 6


def test_fragment_argument_errors():
    with pytest.raises(InputError):
        build_tree(4, 0)
    with pytest.raises(InputError):
        build_pod(4, 1)
    with pytest.raises(InputError):
        build_pod(2, 4)


def test_expand_counts_and_provenance():
    d = Diagram(5, 5, ("a", "b", "c", "leaf"), (
        DiagramEdge("a", "b", 3, 4), DiagramEdge("a", "b"), DiagramEdge("b", "c"),
        DiagramEdge("c", "a"), DiagramEdge("c", "leaf", 2, 2)))
    cg = expand(d)
    n = 3 + 3 * internal_count(5, 4) + 2 * pending_count(5, 2)
    assert cg.graph.vertex_count == n == expected_order(d)
    assert "leaf" not in cg.vertex_map
    tags = cg.provenance
    assert tags[:3] == ("diagram:a", "diagram:b", "diagram:c")
    assert sum(t.startswith("pod:e0/") for t in tags) == 3 * internal_count(5, 4)
    assert sum(t.startswith("tree:e4/") for t in tags) == 2 * pending_count(5, 2)
    lines = cg.provenance_text().splitlines()
    assert lines[0] == "0\tdiagram:a" and len(lines) == n


def test_thin_pending_edge_keeps_its_leaf():
    d = Diagram(3, 3, ("a", "b", "c"), (DiagramEdge("a", "b"), DiagramEdge("b", "c")))
    assert expand(d).graph.vertex_count == 3


def test_pod_depth_tags_measure_from_first_endpoint():
    d = Diagram(4, 4, ("a", "b", "c"), (DiagramEdge("a", "b", 2, 3), DiagramEdge("a", "c"), DiagramEdge("c", "b")))
    cg = expand(d)
    h = nx_graph(cg.graph)
    h.remove_nodes_from([cg.vertex_map["b"], cg.vertex_map["c"]])
    dist = nx.single_source_shortest_path_length(h, cg.vertex_map["a"])
    pods = [(v, tag) for v, tag in enumerate(cg.provenance) if tag.startswith("pod:")]
    assert len(pods) == 2 * internal_count(4, 3)
    for v, tag in pods:
        assert dist[v] == int(tag.split("@")[1])


def test_expand_rejects_invalid_diagram():
    with pytest.raises(InputError):
        expand(Diagram(3, 3, ("a", "b"), (DiagramEdge("a", "b", 4, 2),)))

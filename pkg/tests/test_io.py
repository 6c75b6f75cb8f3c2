import json

import pytest

from pbdkit.classical import affine_plane, one_factorization, projective_plane
from pbdkit.constructions import complement_path_partition, resolvable_cn_partition
from pbdkit.design import Design, validate_pbd, verify_resolution
from pbdkit.graphs import CliquePartition, explicit_graph
from pbdkit.io import (
    DesignFormatError,
    document_kind,
    dumps_design,
    read_design,
    read_edge_coloring,
    read_metadata,
    read_partition,
    write_design,
    write_edge_coloring,
    write_partition,
)


def test_design_round_trip(tmp_path):
    d = projective_plane(2)
    path = tmp_path / "fano.json"
    write_design(d, path, metadata={"name": "fano"})
    d2, res = read_design(path)
    assert d2 == d and res is None
    assert read_metadata(path) == {"name": "fano"}
    # byte-stable
    write_design(d2, tmp_path / "again.json", metadata={"name": "fano"})
    assert path.read_bytes() == (tmp_path / "again.json").read_bytes()
    assert document_kind(path) == "design"


def test_resolution_round_trip(tmp_path):
    d, res = affine_plane(3)
    write_design(d, tmp_path / "ag3.json", resolution=res)
    d2, res2 = read_design(tmp_path / "ag3.json")
    assert d2 == d and res2 == res and verify_resolution(d2, res2)


def test_layout_is_valid_json_one_block_per_line():
    text = dumps_design(Design(3, [(0, 1), (0, 2), (1, 2)]))
    assert json.loads(text)["blocks"] == [[0, 1], [0, 2], [1, 2]]
    assert "    [0, 1]," in text.splitlines()


@pytest.mark.parametrize(
    "doc, where",
    [
        ({"version": 1, "n": 3, "blocks": [[0, 0]]}, "blocks[0]"),
        ({"version": 1, "n": 3, "blocks": [[0, 3]]}, "blocks[0]"),
        ({"version": 1, "n": 3, "blocks": [[0]]}, "blocks[0]"),
        ({"version": 1, "n": 3, "blocks": [[0, "a"]]}, "blocks[0][1]"),
        ({"version": 2, "n": 3, "blocks": []}, "version"),
        ({"version": 1, "n": 3}, "blocks"),
        ({"version": 1, "n": 3, "blocks": [[1, 2], [0, 1]], "resolution": [[0, 1]]}, "blocks"),
        ({"version": 1, "n": 3, "blocks": [[0, 1]], "resolution": [[5]]}, "resolution[0]"),
    ],
)
def test_schema_errors(tmp_path, doc, where):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(DesignFormatError) as exc:
        read_design(path)
    assert exc.value.where == where


def test_syntax_error_has_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "version": 1,\n  "n": 3\n  "blocks": []\n}\n')
    with pytest.raises(DesignFormatError) as exc:
        read_design(path)
    assert exc.value.line == 4


def test_partition_round_trip(tmp_path):
    cert = complement_path_partition(30)
    write_partition(cert.graph, cert.object, tmp_path / "p.json", metadata=cert.metadata())
    g, p, meta = read_partition(tmp_path / "p.json")
    assert g == cert.graph and p == cert.object
    assert meta["certificate"]["achieved_sigma"] == cert.achieved_sigma
    assert document_kind(tmp_path / "p.json") == "partition"


def test_explicit_graph_round_trip(tmp_path):
    g = explicit_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    p = CliquePartition([(0, 1, 2), (2, 3)])
    write_partition(g, p, tmp_path / "e.json")
    g2, p2, _ = read_partition(tmp_path / "e.json")
    assert g2.edges == g.edges and p2 == p


def test_partition_family_errors(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"version": 1, "graph": {"family": "petersen", "n": 10}, "cliques": []}))
    with pytest.raises(DesignFormatError):
        read_partition(path)


def test_coloring_round_trip(tmp_path):
    c = one_factorization(6)
    write_edge_coloring(c, tmp_path / "c.json")
    assert read_edge_coloring(tmp_path / "c.json") == c
    assert document_kind(tmp_path / "c.json") == "coloring"


def test_resolvable_partition_round_trip(tmp_path):
    cert = resolvable_cn_partition(20, 9)
    write_partition(cert.graph, cert.object, tmp_path / "r.json")
    g, p, _ = read_partition(tmp_path / "r.json")
    assert p == cert.object and g.family == ("complete_minus_clique", 20, 9)


def test_corrupted_design_reads_but_fails_validation(tmp_path):
    path = tmp_path / "fano.json"
    write_design(projective_plane(2), path)
    path.write_text(path.read_text().replace("[0, 1, 2]", "[0, 1]"))
    d, _ = read_design(path)
    assert not validate_pbd(d).ok

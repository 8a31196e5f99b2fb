import pytest

import covlab


def test_tetrahedron_tau():
    h = covlab.Hypergraph(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    result = covlab.covering_number(h)
    assert result.tau == 2
    assert covlab.is_cover(h, result.witness)
    assert result.exhaustive


def test_find_cover_decision():
    h = covlab.paley_biplane()
    assert covlab.find_cover(h, 3) is None
    assert len(covlab.find_cover(h, 4)) <= 4


def test_catalog_and_isomorphism():
    names = covlab.catalog_names()
    assert "q4_unique" in names
    q4 = covlab.catalog("q4_unique")
    assert (q4.n, q4.m) == (11, 9)
    perm = list(reversed(range(q4.n)))
    assert covlab.are_isomorphic(q4, q4.relabeled(perm))
    assert covlab.canonical_form(q4) == covlab.canonical_form(q4.relabeled(perm))
    assert not covlab.are_isomorphic(covlab.fano_plane(), covlab.fano_complement())


def test_io_round_trip():
    h = covlab.kummer()
    assert covlab.parse_incidence(covlab.serialize_incidence(h)) == h
    g, labels = covlab.parse_blocks("5 7 9\n5 7 11\n")
    assert labels == [5, 7, 9, 11]
    assert g.edges() == [[0, 1, 2], [0, 1, 3]]


def test_errors_carry_codes():
    with pytest.raises(covlab.CovlabError) as info:
        covlab.projective_plane(6)
    assert info.value.args[1] == "UnsupportedOrder"
    with pytest.raises(ValueError):
        covlab.catalog("nope")


def test_generate_q4_row():
    report = covlab.generate(4, 1, 11, 9, min_degree=2, max_degree=4, target_tau=4,
                             keep_representatives=False, threads=1)
    assert report["class_count"] == 1592
    assert report["extremal_count"] == 1
    assert covlab.are_isomorphic(report["extremal"][0], covlab.catalog("q4_unique"))


def test_descend():
    result = covlab.descend(3)
    assert result["m"] == 10
    assert result["complete"]
    assert result["levels"][-1]["extremal_count"] == 0

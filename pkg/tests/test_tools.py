"""Tests for the MCP tools (called directly through the tool manager)."""

import pytest
from mcp.server.fastmcp import FastMCP

from hopf_ainf.registry import StructureRegistry
from hopf_ainf.tools import certify as certify_tools
from hopf_ainf.tools import lemma as lemma_tools
from hopf_ainf.tools import polytope as polytope_tools


def _tools(module, registry=None):
    mcp = FastMCP("test")
    module.register_tools(mcp, registry or StructureRegistry())
    return {t.name: t.fn for t in mcp._tool_manager._tools.values()}


@pytest.fixture
def registry():
    return StructureRegistry()


@pytest.fixture
def hopf(registry):
    return _tools(certify_tools, registry)


@pytest.fixture
def poly():
    return _tools(polytope_tools)


@pytest.fixture
def lemma():
    return _tools(lemma_tools)


class TestToolRegistration:
    def test_server_registers_everything(self):
        from hopf_ainf import server

        names = {t.name for t in server.mcp._tool_manager._tools.values()}
        assert names == {
            "hopf_certify", "hopf_factors", "hopf_apply", "hopf_structures", "hopf_profiles",
            "polytope_diagonal", "polytope_face", "polytope_faces",
            "polytope_step_matrices", "polytope_check_matrix",
            "lemma_check", "lemma_sweep",
        }


class TestHopfTools:
    def test_certify(self, hopf):
        result = hopf["hopf_certify"](p=3, max_j=3)
        assert result["pass"] is True
        assert result["subject"]["p"] == 3
        assert result["max_j"] == 3

    def test_certify_bad_prime(self, hopf):
        result = hopf["hopf_certify"](p=4)
        assert "error" in result
        assert "odd prime" in result["error"]

    def test_factors(self, hopf):
        result = hopf["hopf_factors"](p=3, count=2)
        assert [f["m"] for f in result["factors"]] == [1, 3]
        assert [f["w_degree"] for f in result["factors"]] == [8, 20]
        assert "pass" not in result

    def test_factors_certified(self, hopf):
        result = hopf["hopf_factors"](p=3, count=2, certify=True, max_j=2)
        assert result["pass"] is True
        assert all(f["failed_relations"] == [] for f in result["factors"])

    def test_apply_mu(self, hopf):
        result = hopf["hopf_apply"](p=3, map="mu", word=[[0, 1], [0, 1]])
        assert result["map"] == "μ"
        assert result["result"]["terms"] == [{"word": [[0, 2]], "coeff": 2}]

    def test_apply_delta_p(self, hopf):
        result = hopf["hopf_apply"](p=3, map="delta_p", word=[[0, 1]])
        assert result["result"] == {"k": 3, "terms": [{"word": [[1, 0]] * 3, "coeff": 1}]}

    def test_apply_unknown_map(self, hopf):
        result = hopf["hopf_apply"](p=3, map="antipode", word=[[0, 1]])
        assert "Unknown map 'antipode'" in result["error"]

    def test_apply_bad_word(self, hopf):
        assert "0 or 1" in hopf["hopf_apply"](p=3, map="delta2", word=[[2, 1]])["error"]
        assert "length 2" in hopf["hopf_apply"](p=3, map="mu", word=[[0, 1]])["error"]

    def test_structures_cached(self, hopf, registry):
        assert hopf["hopf_structures"]()["count"] == 0
        hopf["hopf_apply"](p=5, map="delta2", word=[[0, 1]])
        result = hopf["hopf_structures"]()
        assert result["count"] == 1
        assert result["structures"][0]["p"] == 5
        assert registry.list()[0].p == 5

    def test_profiles(self, hopf):
        assert set(hopf["hopf_profiles"]()["profiles"]) == {"3", "5", "7"}


class TestPolytopeTools:
    def test_perm_diagonal(self, poly):
        result = poly["polytope_diagonal"](polytope="perm", n=3)
        assert result["term_count"] == 8
        assert result["chain_map"] is True
        assert result["face_counts"] == {"0": 6, "1": 6, "2": 1}
        assert "1|23⊗13|2" in result["words"]

    def test_assoc_diagonal(self, poly):
        result = poly["polytope_diagonal"](polytope="assoc", n=3)
        assert result["term_count"] == 6
        assert result["degenerate"] == ["1|23⊗13|2", "13|2⊗3|12"]
        assert result["face_count"] == 11
        assert result["perm_chain_map"] is True
        assert "chain_map" not in result

    def test_diagonal_errors(self, poly):
        assert "n must be in 1..7" in poly["polytope_diagonal"](n=9)["error"]
        assert "Unknown polytope" in poly["polytope_diagonal"](polytope="cube")["error"]

    def test_face(self, poly):
        result = poly["polytope_face"](face="13|2")
        assert result["dimension"] == 1
        assert result["boundary"] == ["1|3|2", "3|1|2"]
        assert result["diagonal"] == ["1|3|2⊗13|2", "13|2⊗3|1|2"]
        assert result["chain_map_defect"] == []
        assert result["leveled_tree"] == {"word": "(12)(34)", "levels": [2, 1, 1]}
        assert result["projection"] == "degenerate"

    def test_face_projection(self, poly):
        assert poly["polytope_face"](face="2|13")["projection"] == "1(23)4"

    def test_bad_face(self, poly):
        assert "error" in poly["polytope_face"](face="1|1")

    def test_faces(self, poly):
        result = poly["polytope_faces"](n=3)
        assert result["count"] == 13
        assert result["faces"][0] == {"face": "123", "blocks": [[1, 2, 3]], "dimension": 2}

    def test_faces_limits(self, poly):
        assert "n <= 5" in poly["polytope_faces"](n=6)["error"]
        assert "error" in poly["polytope_faces"](n=0)

    def test_step_matrices(self, poly):
        result = poly["polytope_step_matrices"](n=3, derived=True)
        assert result["count"] == 6
        assert sum(len(e["derived"]) for e in result["matrices"]) == 8
        first = result["matrices"][0]
        assert first == {
            "shape": [1, 3],
            "matrix": [[1, 2, 3]],
            "derived": [{"matrix": [[1, 2, 3]], "pair": "1|2|3⊗123"}],
        }

    def test_step_matrices_limit(self, poly):
        assert "error" in poly["polytope_step_matrices"](n=6)

    def test_check_matrix(self, poly):
        assert poly["polytope_check_matrix"](rows=[[1, 3], [2, 0]]) == {"step_matrix": True}
        assert poly["polytope_check_matrix"](rows=[[1, 2], [0, 3]]) == {"step_matrix": False}
        assert "repeated" in poly["polytope_check_matrix"](rows=[[1, 1]])["error"]


class TestLemmaTools:
    def test_check(self, lemma):
        result = lemma["lemma_check"](z=[1, 1], i=2)
        assert (result["lhs"], result["rhs"], result["equal"]) == (3, 3, True)
        assert "expansion_ok" not in result

    def test_check_mod_p(self, lemma):
        result = lemma["lemma_check"](z=[4, 4, 4], i=5, p=3)
        assert result["equal"] is True
        assert result["expansion_ok"] is True
        assert result["modulus"] == 3

    def test_check_errors(self, lemma):
        assert "at least one entry" in lemma["lemma_check"](z=[], i=0)["error"]
        assert "odd prime" in lemma["lemma_check"](z=[1], i=0, p=9)["error"]

    def test_sweep(self, lemma):
        result = lemma["lemma_sweep"](p=5, trials=40, seed=3)
        assert result["pass"] is True
        assert result["sweeps"][0]["trials"] == 40
        assert result["sweeps"][0]["seed"] == 3

    def test_sweep_errors(self, lemma):
        assert "trials must be >= 1" in lemma["lemma_sweep"](p=3, trials=0)["error"]

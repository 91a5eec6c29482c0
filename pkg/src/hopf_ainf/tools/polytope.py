"""Polytope tools: diagonals, faces, step matrices and the projection to K_{n+1}."""

from __future__ import annotations

from hopf_ainf.polytope.diagonal import (
    chain_map_defect,
    complementary_pair,
    diagonal_P,
    sorted_pairs,
)
from hopf_ainf.polytope.faces import OrderedPartition, boundary, enumerate_faces
from hopf_ainf.polytope.matrices import (
    IntMatrix,
    derived_matrices,
    is_step_matrix,
    step_matrices,
)
from hopf_ainf.polytope.trees import DEGENERATE, leveled_tree, tonks_projection
from hopf_ainf.registry import StructureRegistry
from hopf_ainf.reports import diagonal_report

# Faces are listed in full only up to this n (P_7 has 47293 faces).
LIST_FACES_MAX_N = 5


def _face_dict(face: OrderedPartition) -> dict:
    return {"face": str(face), "blocks": face.to_list(), "dimension": face.dimension}


def register_tools(mcp, registry: StructureRegistry) -> None:
    """Register permutahedron and associahedron tools with the MCP server."""

    @mcp.tool()
    def polytope_diagonal(polytope: str = "perm", n: int = 3) -> dict:
        """Diagonal of the top cell, over Z_2.

        Args:
            polytope: "perm" for Δ_P on P_n, "assoc" for Δ_K on K_{n+1}.
            n: 1..7.
        """
        try:
            if not 1 <= n <= 7:
                return {"error": f"n must be in 1..7, got {n}"}
            return diagonal_report(polytope, n)
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def polytope_face(face: str) -> dict:
        """Inspect one face of P_n given as an ordered partition like "13|2".

        Returns its dimension, boundary, diagonal, chain-map defect and its
        image in K_{n+1} (or "degenerate").
        """
        try:
            f = OrderedPartition.parse(face)
            tree = tonks_projection(f)
            return {
                **_face_dict(f),
                "boundary": sorted(str(b) for b in boundary(f)),
                "diagonal": [f"{a}⊗{b}" for a, b in sorted_pairs(diagonal_P(f))],
                "chain_map_defect": sorted(f"{a}⊗{b}" for a, b in chain_map_defect(f)),
                "leveled_tree": {
                    "word": leveled_tree(f).to_word(),
                    "levels": list(leveled_tree(f).levels or ()),
                },
                "projection": "degenerate" if tree is DEGENERATE else tree.to_word(),
            }
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def polytope_faces(n: int) -> dict:
        """All faces of P_n (n <= 5), top cell first."""
        try:
            if n > LIST_FACES_MAX_N:
                return {"error": f"face listing is limited to n <= {LIST_FACES_MAX_N}, got {n}"}
            faces = enumerate_faces(n)
            return {"n": n, "count": len(faces), "faces": [_face_dict(f) for f in faces]}
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def polytope_step_matrices(n: int, derived: bool = False) -> dict:
        """Step matrices with entries 1..n (n <= 5), optionally with their derived matrices.

        Each derived matrix is listed with the complementary pair it encodes.
        """
        try:
            if n > LIST_FACES_MAX_N:
                return {"error": f"listing is limited to n <= {LIST_FACES_MAX_N}, got {n}"}
            out = []
            for e in step_matrices(n):
                entry: dict = {"shape": [e.q, e.p], "matrix": e.to_list()}
                if derived:
                    entry["derived"] = [
                        {"matrix": m.to_list(), "pair": "⊗".join(map(str, complementary_pair(m)))}
                        for m in sorted(derived_matrices(e))
                    ]
                out.append(entry)
            return {"n": n, "count": len(out), "matrices": out}
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def polytope_check_matrix(rows: list[list[int]]) -> dict:
        """Whether a matrix (entries 0 for empty cells) is a step matrix."""
        try:
            return {"step_matrix": is_step_matrix(IntMatrix(tuple(map(tuple, rows))))}
        except ValueError as e:
            return {"error": str(e)}

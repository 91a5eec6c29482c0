"""Structure tools: hopf_certify, hopf_factors, hopf_apply, hopf_structures, hopf_profiles."""

from __future__ import annotations

from hopf_ainf.algebra.tensor import make_word
from hopf_ainf.config import list_profiles
from hopf_ainf.registry import StructureRegistry
from hopf_ainf.reports import certify_report, factors_report

MAPS = ("mu", "delta2", "delta_p")


def register_tools(mcp, registry: StructureRegistry) -> None:
    """Register structure and certification tools with the MCP server."""

    @mcp.tool()
    def hopf_certify(
        p: int,
        m: int = 1,
        max_j: int | None = None,
        workers: int | None = None,
    ) -> dict:
        """Certify that E(v, 2m+1) ⊗ Γ(w, 2mp+2) over Z_p is a Hopf A∞-coalgebra.

        Runs the Hopf axioms, the A∞ relations at every arity with a
        composable pair, the cobar cross-checks and the Hopf relation on every
        basis input with γ-index sum up to max_j.

        Args:
            p: Odd prime.
            m: Degree parameter, |v| = 2m+1 (default 1).
            max_j: Sweep bound (default from the per-prime profile).
            workers: Sweep threads (default HOPF_AINF_WORKERS or 1).
        """
        try:
            return certify_report(registry, p, m, max_j, workers)
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def hopf_factors(
        p: int,
        count: int = 2,
        certify: bool = False,
        max_j: int | None = None,
    ) -> dict:
        """List the first factors of H_*(Z, 3; Z_p), optionally certifying each.

        Args:
            p: Odd prime.
            count: Number of factors (m = 1, p, p², ...).
            certify: Run the full certificate on every factor.
            max_j: Sweep bound when certifying.
        """
        try:
            return factors_report(registry, p, count, certify, max_j)
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def hopf_apply(p: int, map: str, word: list[list[int]], m: int = 1) -> dict:
        """Apply μ, Δ₂ or Δ_p to one basis word.

        Args:
            p: Odd prime.
            map: One of mu, delta2, delta_p.
            word: Basis elements as [i, j] pairs for v^i γ_j (two for mu, one otherwise).
            m: Degree parameter.
        """
        try:
            if map not in MAPS:
                return {"error": f"Unknown map '{map}'. Available: {', '.join(MAPS)}"}
            structure = registry.get(p, m)
            g = getattr(structure, map)
            result = g(make_word(word))
            return {"map": g.name, "input": word, "result": result.to_dict()}
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def hopf_structures() -> dict:
        """List structures built so far in this server (cached by p and m)."""
        structures = registry.list()
        return {
            "count": len(structures),
            "structures": [s.to_dict() for s in structures],
        }

    @mcp.tool()
    def hopf_profiles() -> dict:
        """Per-prime default sweep bounds."""
        return {"profiles": {str(p): d for p, d in list_profiles().items()}}


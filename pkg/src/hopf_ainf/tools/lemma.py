"""Lemma tools: lemma_check and lemma_sweep."""

from __future__ import annotations

from hopf_ainf.checks.lemma import lemma_comb, vandermonde_expansion_check
from hopf_ainf.registry import StructureRegistry
from hopf_ainf.reports import lemma_report


def register_tools(mcp, registry: StructureRegistry) -> None:
    """Register the binomial-identity tools with the MCP server."""

    @mcp.tool()
    def lemma_check(z: list[int], i: int, p: int | None = None) -> dict:
        """Both sides of C(Σz + 1, i) = Σ_{|s|=i-1} Π C(z_t, s_t) + Σ_{|t|=i} Π C(z_t, t_t).

        Args:
            z: Tuple of nonnegative integers.
            i: Nonnegative integer.
            p: Reduce mod this odd prime (omit for exact integers).
        """
        try:
            result = lemma_comb(z, i, p).to_dict()
            if p is not None:
                result["expansion_ok"] = vandermonde_expansion_check(z, i, p)
            return result
        except ValueError as e:
            return {"error": str(e)}

    @mcp.tool()
    def lemma_sweep(p: int, trials: int = 1000, seed: int = 0, exhaustive: bool = False) -> dict:
        """Seeded random sweep of the identity mod p.

        Args:
            p: Odd prime; tuples have length p.
            trials: Number of random (z, i).
            seed: RNG seed, so reruns are identical.
            exhaustive: Also sweep every tuple over ℕ with Σz <= 12, length <= 5.
        """
        try:
            return lemma_report(p, trials, seed, exhaustive)
        except ValueError as e:
            return {"error": str(e)}

"""JSON-ready reports shared by the CLI and the MCP tools."""

from __future__ import annotations

from hopf_ainf.checks.certify import certify_hopf_ainf
from hopf_ainf.checks.lemma import exhaustive_sweep, random_sweep
from hopf_ainf.checks.sweep import SweepRunner
from hopf_ainf.checks.types import SCHEMA_VERSION
from hopf_ainf.config import default_max_j
from hopf_ainf.hopf.structure import em_factors_n3
from hopf_ainf.polytope.diagonal import diagonal_top, is_chain_map, sorted_pairs
from hopf_ainf.polytope.faces import OrderedPartition, face_counts
from hopf_ainf.polytope.trees import associahedron_faces, degenerate_terms, diagonal_K
from hopf_ainf.registry import StructureRegistry

# Chain-map verification walks every face of P_n; beyond this it is skipped.
CHAIN_MAP_MAX_N = 5


def certify_report(
    registry: StructureRegistry, p: int, m: int = 1, max_j: int | None = None,
    workers: int | None = None,
) -> dict:
    structure = registry.get(p, m)
    max_j = default_max_j(structure.p) if max_j is None else max_j
    cert = certify_hopf_ainf(structure, max_j, SweepRunner(workers))
    return cert.to_dict()


def _face_json(face: OrderedPartition) -> list[list[int]]:
    return face.to_list()


def diagonal_report(polytope: str, n: int) -> dict:
    """The diagonal of the top cell of P_n ("perm") or of K_{n+1} ("assoc")."""
    chain_map = is_chain_map(n) if n <= CHAIN_MAP_MAX_N else None
    out: dict = {"schema": SCHEMA_VERSION, "polytope": polytope, "n": n}
    if polytope == "perm":
        pairs = sorted_pairs(diagonal_top(n))
        out.update({
            "terms": [[_face_json(a), _face_json(b)] for a, b in pairs],
            "words": [f"{a}⊗{b}" for a, b in pairs],
            "term_count": len(pairs),
            "face_counts": {str(d): c for d, c in face_counts(n).items()},
            "chain_map": chain_map,
        })
    elif polytope == "assoc":
        pairs = sorted(diagonal_K(n), key=lambda t: (t[0].to_word(), t[1].to_word()))
        out.update({
            "terms": [[a.to_nested(), b.to_nested()] for a, b in pairs],
            "words": [f"{a}⊗{b}" for a, b in pairs],
            "term_count": len(pairs),
            "degenerate": [f"{a}⊗{b}" for a, b in degenerate_terms(n)],
            "face_count": len(associahedron_faces(n)),
            # Δ_K is the ϑ₀ image of Δ_P, so the flag is Δ_P's
            "perm_chain_map": chain_map,
        })
    else:
        raise ValueError(f"Unknown polytope '{polytope}'. Available: assoc, perm")
    return out


def factors_report(
    registry: StructureRegistry, p: int, count: int, certify: bool = False,
    max_j: int | None = None, workers: int | None = None,
) -> dict:
    """The first ``count`` factors E(v_i, 2p^i+1) ⊗ Γ(w_i, 2p^{i+1}+2) of H_*(Z, 3; Z_p)."""
    factors = []
    all_pass = True
    for i, params in enumerate(em_factors_n3(p, count)):
        entry = {"index": i, **params.to_dict()}
        if certify:
            cert = certify_report(registry, params.p, params.m, max_j, workers)
            entry["pass"] = cert["pass"]
            entry["failed_relations"] = [
                r["relation_id"] for r in cert["reports"] if not r["pass"]
            ]
            all_pass = all_pass and cert["pass"]
        factors.append(entry)
    out = {"schema": SCHEMA_VERSION, "p": p, "count": count, "factors": factors}
    if certify:
        out["pass"] = all_pass
    return out


def lemma_report(p: int, trials: int, seed: int = 0, exhaustive: bool = False) -> dict:
    """Seeded random sweep over Z_p, optionally with the exhaustive sweep over ℕ."""
    sweeps = [random_sweep(p, trials, seed)]
    if exhaustive:
        sweeps.append(exhaustive_sweep())
    return {
        "schema": SCHEMA_VERSION,
        "p": p,
        "pass": all(s.passed for s in sweeps),
        "sweeps": [s.to_dict() for s in sweeps],
    }

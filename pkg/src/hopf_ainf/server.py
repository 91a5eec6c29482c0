"""hopf-ainf MCP server for certification and polytope diagonals over stdio."""

from __future__ import annotations

from mcp.server.fastmcp import FastMCP

from hopf_ainf.registry import StructureRegistry
from hopf_ainf.tools import certify as certify_tools
from hopf_ainf.tools import lemma as lemma_tools
from hopf_ainf.tools import polytope as polytope_tools

mcp = FastMCP("hopf-ainf")

# Shared structure registry, module-level singleton
_registry = StructureRegistry()

# Register tool modules
certify_tools.register_tools(mcp, _registry)
polytope_tools.register_tools(mcp, _registry)
lemma_tools.register_tools(mcp, _registry)


def main() -> None:
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()

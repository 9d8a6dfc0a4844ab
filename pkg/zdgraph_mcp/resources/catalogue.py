"""MCP resources: the verify catalogue, the text syntax and per-model reports"""

import logging

from .. import reports
from ..catalogue import CATALOGUE, VERIFY_REFERENCES, VERIFY_TAGS
from ..core import zdgraph
from ..core.zdgraph import GraphFlavor
from ..utils.errors import ZeroDivisorGraphError
from ..utils.parser import parse_model

logger = logging.getLogger(__name__)

SYNTAX_REFERENCE = """# Text Syntax

## Sets

- `empty`, `naturals`, `evens`, `odds`
- `{0,1,2}` - finite point list
- `[2..5]` - closed interval
- `cofinite del {0,3}` - every natural except the listed points
- `mod 3 res {0,1} add {2} del {3}` - residues modulo m, with finite corrections

## Models

- ground: `countable` or `finite:n`
- ideal: `all`, `finite` or `powerset:<set>`, e.g. `powerset:{0,1,2}`

## Flavors

- `cp` - supports must lie in the ideal
- `cpinf` - supports need only lie in X_P

## Functions and alphabets

- function: `{0:5, 1:-2/3}` (point:rational pairs, finite support)
- alphabet: `1,2` or `{1,-1/2}` (distinct nonzero rationals)

## psi files

A JSON list of `[x_vertex, y_vertex]` pairs, one per vertex of the first graph:

```json
[[0, 1], [1, 0], [2, 3], [3, 2]]
```

## Run configurations

Flat `key=value` files named `<name>.conf` in `./configs`,
`~/.config/zdgraph-mcp` or `/etc/zdgraph-mcp`. Keys: ground, ideal, flavor,
window, alphabet, cap, out, seed, only, mutate, psi, target_ground,
target_ideal, budget. Command-line flags override file values.
"""


def register_resources(mcp: any) -> None:
    """Register catalogue resources with MCP server

    Args:
        mcp: FastMCP server instance
    """

    @mcp.resource("zdgraph://catalogue")
    async def get_catalogue() -> str:
        """List the models walked by verify

        Returns:
            Markdown table of catalogue entries and the known check tags
        """
        result = "# Verify Catalogue\n\n"
        result += "| Name | Ground | Ideal | Flavor | Window | Kind |\n"
        result += "|---|---|---|---|---|---|\n"
        for entry in CATALOGUE:
            window = entry.window or "X_P"
            result += (
                f"| {entry.name} | {entry.ground} | {entry.ideal} | {entry.flavor} "
                f"| {window} | {entry.kind} |\n"
            )
        result += "\n## Check tags\n\n"
        result += "\n".join(
            f"- `{tag}` ({', '.join(VERIFY_REFERENCES[tag])})" for tag in VERIFY_TAGS
        )
        return result + "\n"

    @mcp.resource("zdgraph://syntax")
    async def get_syntax() -> str:
        """Reference for the text forms accepted by the CLI and the tools"""
        return SYNTAX_REFERENCE

    @mcp.resource("zdgraph://models/{ground}/{ideal}")
    async def get_model_report(ground: str, ideal: str) -> str:
        """GraphReport JSON for the C_P flavor of a model

        Args:
            ground: 'countable' or 'finite:n'
            ideal: 'all', 'finite' or 'powerset:<set>'

        Returns:
            Report JSON with sorted keys

        Examples:
            zdgraph://models/finite:3/all
            zdgraph://models/countable/finite
        """
        try:
            report = zdgraph.analyze(parse_model(ground, ideal), GraphFlavor.CP)
            return reports.graph_report_json(report)
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in get_model_report resource: {e}")
            return f"❌ Error analyzing model: {str(e)}"

    logger.info("Catalogue resources registered")

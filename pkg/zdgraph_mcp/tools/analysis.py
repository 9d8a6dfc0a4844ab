"""MCP tools for model analysis, verification, export and reconstruction"""

import asyncio
import logging
import random
from typing import Optional

from .. import reports
from ..catalogue import VerifyOptions, run_verify
from ..config.settings import settings
from ..core import blowup, zdgraph
from ..core.blowup import BlowupSpec
from ..core.isorecon import AbstractGraph, random_automorphism_psi, reconstruct, verify_ring_iso
from ..core.zdgraph import VertexClass
from ..utils.errors import EmptyGraphError, ReconstructionError, ZeroDivisorGraphError
from ..utils.parser import (
    parse_alphabet,
    parse_flavor,
    parse_function,
    parse_model,
    parse_set,
    parse_window,
)

logger = logging.getLogger(__name__)


def register_tools(mcp: any) -> None:
    """Register analysis tools with MCP server

    Args:
        mcp: FastMCP server instance
    """

    @mcp.tool()
    async def analyze_model(
        ground: str = "countable", ideal: str = "finite", flavor: str = "cp"
    ) -> str:
        """Compute every closed-form invariant of a zero-divisor graph

        Args:
            ground: 'countable' or 'finite:n'
            ideal: 'all', 'finite' or 'powerset:<set>'
            flavor: 'cp' or 'cpinf'

        Returns:
            Markdown table of diameter, radius, girth, triangulation,
            complementation and the cardinal invariants

        Examples:
            analyze_model(ground="finite:3", ideal="all")
            analyze_model(ground="countable", ideal="finite", flavor="cpinf")
        """
        try:
            model = parse_model(ground, ideal)
            report = zdgraph.analyze(model, parse_flavor(flavor))
            return reports.graph_report_markdown(report)
        except EmptyGraphError as e:
            return f"❌ Empty zero-divisor graph (Th 2.12: |X_P| < 2): {str(e)}"
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in analyze_model: {e}")
            return f"❌ Error analyzing model: {str(e)}"

    @mcp.tool()
    async def describe_vertex(
        support: str,
        ground: str = "countable",
        ideal: str = "finite",
        flavor: str = "cp",
    ) -> str:
        """Describe one vertex class: eccentricity, triangles, complement, colour

        Args:
            support: Support set, e.g. '{0,1}' or 'evens'
            ground: 'countable' or 'finite:n'
            ideal: 'all', 'finite' or 'powerset:<set>'
            flavor: 'cp' or 'cpinf'

        Returns:
            Markdown summary of the class

        Examples:
            describe_vertex(support="{0,1}", ground="finite:3", ideal="all")
        """
        try:
            model = parse_model(ground, ideal)
            vclass = VertexClass.of(model, parse_flavor(flavor), parse_set(support))
            ecc = zdgraph.eccentricity(vclass)
            complement = zdgraph.complement_class(vclass)
            neighbor = zdgraph.dominating_neighbor(vclass)

            result = f"# Vertex class {vclass.to_text()}\n\n"
            result += f"- **Model:** {model.to_text()} ({vclass.flavor.value})\n"
            result += f"- **Eccentricity:** {ecc.value}"
            if ecc.witness is not None:
                result += f" (farthest class {ecc.witness.to_text()})"
            result += "\n"
            result += f"- **On a triangle:** {'yes' if zdgraph.on_triangle(vclass) else 'no'}\n"
            result += f"- **Complement:** {complement.to_text() if complement else 'none'}\n"
            result += f"- **Colour:** {zdgraph.color_of(vclass)}\n"
            result += f"- **Dominated by:** 1_{neighbor.support.min()}\n"
            return result
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in describe_vertex: {e}")
            return f"❌ Error describing vertex: {str(e)}"

    @mcp.tool()
    async def list_neighbors(
        function: str,
        ground: str = "finite:3",
        ideal: str = "all",
        alphabet: str = "1,2",
        limit: int = 50,
    ) -> str:
        """List neighbours of a function inside a finite window

        Args:
            function: Function literal, e.g. '{0:1}'
            ground: 'countable' or 'finite:n'
            ideal: 'all', 'finite' or 'powerset:<set>'
            alphabet: Values the neighbours may take
            limit: Maximum number of neighbours to print

        Returns:
            Neighbour count and the first ``limit`` neighbours

        Examples:
            list_neighbors(function="{0:1}", alphabet="1,2,3,4,5,6,7")
        """
        try:
            model = parse_model(ground, ideal)
            f = parse_function(function)
            found = blowup.neighbors_of(model, f, parse_alphabet(alphabet))
            result = f"# Neighbours of {f.to_text()}\n\n**Count:** {len(found)}\n\n"
            result += "\n".join(f"- {g.to_text()}" for g in found[:limit])
            if len(found) > limit:
                result += f"\n- ... {len(found) - limit} more"
            return result
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in list_neighbors: {e}")
            return f"❌ Error listing neighbours: {str(e)}"

    @mcp.tool()
    async def verify_catalogue(
        only: Optional[str] = None, mutate: bool = False, seed: int = 0
    ) -> str:
        """Cross-check closed forms against the brute-force oracle on every catalogue model

        Args:
            only: Restrict to one check tag, e.g. 'distance', or to the checks
                of one result tag, e.g. 'Th2.7'
            mutate: Inject an adjacency fault; the run should then fail
            seed: Seed for sampled checks

        Returns:
            One summary line per model followed by any discrepancies

        Examples:
            verify_catalogue()
            verify_catalogue(only="chromatic")
        """
        try:
            options = VerifyOptions(
                only=only,
                mutate=mutate,
                seed=seed,
                alphabet=settings.default_alphabet,
                cap=settings.vertex_cap,
                budget_seconds=settings.oracle_budget_seconds,
                hull_samples=settings.hull_samples,
                orthogonal_samples=settings.orthogonal_samples,
                iso_rounds=settings.iso_rounds,
                iso_samples=settings.iso_samples,
                workers=settings.verify_workers,
            )
            report = await asyncio.to_thread(run_verify, options)
            prefix = "✅" if report.passed else "❌"
            return f"{prefix} Verification\n\n```\n{reports.verify_text(report)}```\n"
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in verify_catalogue: {e}")
            return f"❌ Error running verification: {str(e)}"

    @mcp.tool()
    async def export_blowup(
        ground: str = "countable",
        ideal: str = "powerset:{0,1}",
        flavor: str = "cp",
        window: Optional[str] = None,
        alphabet: str = "1,2",
    ) -> str:
        """Materialize a blow-up graph and return it as DOT text

        Args:
            ground: 'countable' or 'finite:n'
            ideal: 'all', 'finite' or 'powerset:<set>'
            flavor: 'cp' or 'cpinf'
            window: Finite window of X_P (default: X_P or its first points)
            alphabet: Nonzero values, e.g. '1,2'

        Returns:
            DOT graph text

        Examples:
            export_blowup(ideal="powerset:{0,1}")
        """
        try:
            spec = BlowupSpec.for_model(
                parse_model(ground, ideal),
                parse_flavor(flavor),
                window=parse_window(window),
                alphabet=parse_alphabet(alphabet),
                cap=settings.vertex_cap,
            )
            return blowup.to_dot(blowup.generate(spec))
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in export_blowup: {e}")
            return f"❌ Error exporting blow-up: {str(e)}"

    @mcp.tool()
    async def reconstruct_isomorphism(size_x: int = 3, size_y: int = 3, seed: int = 0) -> str:
        """Recover a ring isomorphism of C_F rings from a graph isomorphism

        Equal sizes use a random automorphism of the blow-up as psi; different
        sizes are rejected by the chromatic check.

        Args:
            size_x: Number of points of the first finite discrete space
            size_y: Number of points of the second
            seed: Seed for the automorphism and the sampled verification

        Returns:
            The recovered point map and the verification verdict

        Examples:
            reconstruct_isomorphism(size_x=3, size_y=3, seed=7)
            reconstruct_isomorphism(size_x=2, size_y=3)
        """
        try:
            alphabet = parse_alphabet(settings.default_alphabet)
            gx, gy = (
                blowup.generate(
                    BlowupSpec.for_model(
                        parse_model(f"finite:{size}", "finite"),
                        alphabet=alphabet,
                        cap=settings.vertex_cap,
                    )
                )
                for size in (size_x, size_y)
            )
            rng = random.Random(seed)
            psi = random_automorphism_psi(gx, rng)[0] if size_x == size_y else {}
            try:
                desc = reconstruct(
                    AbstractGraph.from_explicit(gx), AbstractGraph.from_explicit(gy), psi
                )
            except ReconstructionError as e:
                return f"❌ Reconstruction rejected: {str(e)}"

            verdict = verify_ring_iso(desc, settings.iso_samples, seed=seed)
            prefix = "✅" if verdict.verified else "❌"
            result = f"{prefix} Reconstructed phi\n\n"
            result += "\n".join(f"- {x} -> {y}" for x, y in sorted(desc.point_map.items()))
            result += f"\n\n**Checks:** {verdict.checks}\n"
            if verdict.counterexample:
                result += f"**Counterexample:** {verdict.counterexample}\n"
            return result
        except ZeroDivisorGraphError as e:
            return f"❌ {str(e)}"
        except Exception as e:
            logger.error(f"Error in reconstruct_isomorphism: {e}")
            return f"❌ Error reconstructing isomorphism: {str(e)}"

    @mcp.tool()
    async def list_run_configs() -> str:
        """List run configuration files found in the config paths

        Returns:
            Configuration names usable with the CLI's --config flag
        """
        try:
            names = settings.list_run_configs()
            if not names:
                return (
                    "❌ No run configurations found.\n\n"
                    "Add <name>.conf files to one of these directories:\n"
                    + "\n".join(f"- {path}" for path in settings.config_paths)
                )
            result = "# Run Configurations\n\n"
            for name in names:
                result += f"- **{name}**\n"
            return result
        except Exception as e:
            logger.error(f"Error in list_run_configs: {e}")
            return f"❌ Error listing run configurations: {str(e)}"

    logger.info("Analysis tools registered")

"""Main zero-divisor graph MCP server entry point"""

import logging

from mcp.server.fastmcp import FastMCP

from .config.settings import settings

logger = logging.getLogger(__name__)

# Initialize FastMCP server
mcp = FastMCP(
    name=settings.server_name,
)


def register_components() -> None:
    """Register all tools and resources"""

    # Register analysis tools
    try:
        from .tools import analysis as analysis_tools
        analysis_tools.register_tools(mcp)
        logger.info("Analysis tools registered")
    except ImportError as e:
        logger.error(f"Failed to register analysis tools: {e}")
        raise

    # Register catalogue resources
    try:
        from .resources import catalogue as catalogue_resources
        catalogue_resources.register_resources(mcp)
        logger.info("Catalogue resources registered")
    except ImportError as e:
        logger.error(f"Failed to register catalogue resources: {e}")
        raise


def main() -> None:
    """Main entry point"""
    logging.basicConfig(level=getattr(logging, settings.log_level.upper()))
    try:
        logger.info(f"Starting {settings.server_name} v{settings.server_version}")
        logger.info(f"Transport: {settings.transport}")
        logger.info(f"Log level: {settings.log_level}")

        run_configs = settings.list_run_configs()
        if run_configs:
            logger.info(f"Available run configs: {', '.join(run_configs)}")

        # Register all components
        register_components()

        # Start server based on transport
        if settings.transport == "stdio":
            logger.info("Starting with stdio transport")
            mcp.run()
        elif settings.transport == "http":
            logger.info("Starting with streamable HTTP transport")
            mcp.run(transport="streamable-http")
        else:
            raise ValueError(f"Unsupported transport: {settings.transport}")

    except Exception as e:
        logger.error(f"Server startup failed: {e}")
        raise


if __name__ == "__main__":
    main()

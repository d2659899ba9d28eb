"""Main entry point for the Neutrino STA MCP Server"""

import asyncio

from neutrino_sta.mcp.server import create_server
from neutrino_sta.utils.logging_config import setup_logging


async def serve(output_dir: str = None):
    """Run the MCP server until stdin closes"""
    server = create_server(output_dir)
    await server.run()


def main():
    """Main entry point"""
    setup_logging()
    asyncio.run(serve())


if __name__ == "__main__":
    main()

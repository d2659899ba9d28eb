"""MCP server module"""
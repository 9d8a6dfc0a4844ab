"""MCP tools for model analysis and verification"""

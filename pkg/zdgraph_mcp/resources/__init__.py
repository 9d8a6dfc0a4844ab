"""MCP resources for the model catalogue and text syntax"""

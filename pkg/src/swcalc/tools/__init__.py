"""
MCP Tools - evaluation, invariant and verdict functions
These functions are exposed as MCP tools to LLM agents
"""

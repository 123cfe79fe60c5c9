"""
Inequality check tasks and their registry.
"""

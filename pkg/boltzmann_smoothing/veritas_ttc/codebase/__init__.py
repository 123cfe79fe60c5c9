"""
Assembly layer for veritas TTC modules.
"""

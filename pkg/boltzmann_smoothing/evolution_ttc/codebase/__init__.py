"""
Assembly layer for evolution TTC modules.
"""

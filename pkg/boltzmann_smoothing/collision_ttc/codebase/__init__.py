"""
Assembly layer for collision TTC modules.
"""

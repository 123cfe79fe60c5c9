"""
Assembly layer for storage TTC modules.
"""

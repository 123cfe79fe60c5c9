"""
Assembly layer for mollifier TTC modules.
"""

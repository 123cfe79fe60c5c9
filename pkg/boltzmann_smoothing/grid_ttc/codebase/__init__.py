"""
Assembly layer for grid TTC modules.
"""

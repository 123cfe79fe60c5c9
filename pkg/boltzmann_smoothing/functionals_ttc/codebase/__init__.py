"""
Assembly layer for functionals TTC modules.
"""

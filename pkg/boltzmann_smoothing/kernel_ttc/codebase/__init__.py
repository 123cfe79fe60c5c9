"""
Assembly layer for kernel TTC modules.
"""

"""
Assembly layer for runner TTC modules.
"""

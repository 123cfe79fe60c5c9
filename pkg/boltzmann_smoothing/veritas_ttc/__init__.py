"""
Veritas TTC package: inequality checks with fitted constants and refinement trails.
"""

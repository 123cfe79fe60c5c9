"""
Norm, dissipation and uniform-class tasks.
"""

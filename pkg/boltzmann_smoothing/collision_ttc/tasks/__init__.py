"""
Collision operator tasks.
"""

"""
Collision workspace, field sampling and offset rules.
"""

"""
Trajectory and report contracts.
"""

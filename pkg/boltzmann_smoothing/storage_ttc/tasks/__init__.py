"""
Artifact persistence tasks.
"""

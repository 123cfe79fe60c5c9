"""
Artifact headers, manifest records and atomic writes.
"""

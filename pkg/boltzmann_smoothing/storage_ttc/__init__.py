"""
Storage TTC package: field files, JSON and CSV artifacts and run manifests.
"""

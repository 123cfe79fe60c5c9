"""
Evolution TTC package: time stepping, trajectories, the energy ledger and regularity tracking.
"""

"""
Stepping, ledger and tracker tasks.
"""

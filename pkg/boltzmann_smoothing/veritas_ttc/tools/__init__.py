"""
Fit engine, function families and closed-form oracles.
"""

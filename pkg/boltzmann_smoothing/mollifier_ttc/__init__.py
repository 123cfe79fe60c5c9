"""
Mollifier TTC package: the symbol, its schedule and the pointwise inequality checks.
"""

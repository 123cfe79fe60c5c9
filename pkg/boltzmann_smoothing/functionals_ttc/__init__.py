"""
Functionals TTC package: norms, moments, entropy dissipation and the uniform class.
"""

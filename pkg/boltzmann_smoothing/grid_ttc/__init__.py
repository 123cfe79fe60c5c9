"""
Grid TTC package: velocity lattice, Fourier layer and quadrature.
"""

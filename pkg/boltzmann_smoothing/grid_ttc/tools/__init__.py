"""
Lattice types and the Fourier layer.
"""

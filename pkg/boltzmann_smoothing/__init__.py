"""
Boltzmann Smoothing - Spectral Non-Cutoff Collision Operator Toolkit

Discretizes the non-cutoff Boltzmann collision operator on a periodic velocity lattice,
integrates the homogeneous equation in time and checks the coercivity, commutator and
interpolation inequalities behind the smoothing effect by fitting their constants.

The package root stays import-light so ``python -m boltzmann_smoothing`` can load ``.env``
before ``boltzmann_smoothing.config`` reads the environment; the public surface lives in the
area modules (``grid``, ``kernel``, ``collision``, ``functionals``, ``mollifier``,
``evolution``, ``veritas``, ``storage``, ``runner``).
"""

__version__ = "0.1.0"
__author__ = "Boltzmann Smoothing Team"

__all__ = ["__version__"]

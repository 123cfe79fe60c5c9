"""
Kernel TTC package: cross section, kinetic split and collision geometry.
"""

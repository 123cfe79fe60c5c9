"""
Collision TTC package: frequency-side and velocity-side evaluation of Q.
"""

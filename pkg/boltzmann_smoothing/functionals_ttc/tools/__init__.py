"""
Request and report contracts for functionals.
"""

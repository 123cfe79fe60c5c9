"""
Kinetic, angular and geometric kernel tasks.
"""

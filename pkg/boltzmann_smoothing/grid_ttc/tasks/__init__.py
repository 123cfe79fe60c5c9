"""
Velocity-lattice quadrature tasks.
"""

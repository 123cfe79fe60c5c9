"""
Symbol evaluation and inequality sweep tasks.
"""

"""
Run-config section contracts and their INI value parsers.
"""

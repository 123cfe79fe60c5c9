"""
Symbol and schedule contracts.
"""

"""
Config loading, subcommand bodies, reports and the CLI.
"""

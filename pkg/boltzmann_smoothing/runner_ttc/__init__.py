"""
Runner TTC package: run configs, initial data, subcommands and the command-line surface.
"""

"""
Command-line surface: argument parsing, resolved settings and commands.
"""

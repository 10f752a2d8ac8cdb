"""
Text formats for rings, groups and modules, and report rendering.
"""

"""
Configuration package for fpring-lab.
"""

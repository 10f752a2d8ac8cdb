"""
Exact finite algebra: rings, groups, group rings, finitely presented modules,
homological constructions and ring-level predicates.

Everything in this package is a pure function of immutable table data.
Configuration is passed in through ``algebra.caps.Caps``.
"""

"""
Theorem-verification harness: catalog, module corpora, theorem checks and runner.
"""

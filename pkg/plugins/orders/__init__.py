# plugins/orders/__init__.py
"""Admissible path orders (deglex, degrevlex)."""

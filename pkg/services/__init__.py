# services/__init__.py
"""
Services Package (Koszul Toolkit)

Report rendering and seeded experiment sweeps.

Project: Koszul Toolkit
License: MIT
"""

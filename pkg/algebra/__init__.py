# algebra/__init__.py
"""
Algebra Package (Koszul Toolkit)

Quivers and paths, the path algebra, Groebner bases, chains, resolutions and
the Koszul-type decision procedures.

Project: Koszul Toolkit
License: MIT
"""

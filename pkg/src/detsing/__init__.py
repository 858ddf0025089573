"""Exact invariants of non-commutative desingularizations of generic
determinantal varieties: cohomology and Betti tables, quiverized
Clifford presentations, moduli representation checks, and Ext tables
between graded simples, all over exact rational arithmetic and
certified against brute-force graded linear algebra."""

__version__ = "0.1.0"

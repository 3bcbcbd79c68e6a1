"""Schubert polynomials: normal forms in S_n, three evaluators, the
leading-monomial bijection and structure constants."""

__version__ = "0.1.0"

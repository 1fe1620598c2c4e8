"""leibniz: exact computations with Leibniz algebras, their bialgebras and Rota-Baxter operators."""

__version__ = "0.1.0"

"""Equivariant L-functions of coefficient systems over finite fields."""

__version__ = "0.1.0"

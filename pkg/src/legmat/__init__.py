"""Generalized Legendre matrices over finite fields."""

"""Theta functions and modular parameters for alternative elliptic bases."""

"""farey-duality: fraction trees, intersection vectors and Christoffel words."""

__version__ = "0.1.0"

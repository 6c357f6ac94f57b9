"""twisted-hv - exact computer algebra for twisted Heisenberg-Virasoro algebras."""

__version__ = "0.1.0"

"""Exact cohomology of equivariant bundles on isotropic Grassmannians."""

__version__ = "0.1.0"

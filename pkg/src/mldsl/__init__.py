"""Exact computation of the maximum-likelihood data singular locus."""

__version__ = "0.1.0"
ENGINE_VERSION = "mldsl-gb-1"

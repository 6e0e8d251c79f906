"""Tree decompositions of logarithmic width for graphs excluding thetas,
pyramids, generalized prisms, and large cliques."""

from .graph import Graph, SizeCapExceeded

__all__ = ["Graph", "SizeCapExceeded"]

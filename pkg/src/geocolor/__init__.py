"""Coloring geometric hypergraphs: bottomless rectangles, base-line rectangles, half-planes."""

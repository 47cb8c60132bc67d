"""Equivariant minimal free resolutions of squarefree Veronese ideals."""

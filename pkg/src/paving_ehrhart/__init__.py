"""Exact Ehrhart polynomials and volumes of hypersimplices, panhandle and
paving matroids, Steiner-system matroids, with brute-force oracles and
positivity verification harnesses."""

from .exactmath import Polynomial, binomial, eulerian, elm, stirling_first_unsigned
from .matroid import Matroid, PanhandleParams, PavingProfile
from .ehrhart import (
    ehrhart_hypersimplex,
    ehrhart_panhandle,
    ehrhart_paving,
    ehrhart_relaxation,
    ehrhart_sparse_paving,
    relaxation_delta,
)
from .volume import volume_panhandle, volume_paving
from .designs import (
    SteinerSystem,
    ehrhart_projective_plane,
    ehrhart_steiner,
    fano_plane,
    volume_projective_plane,
    volume_steiner,
)

__version__ = "0.1.0"

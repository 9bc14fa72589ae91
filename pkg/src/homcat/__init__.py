"""Exact homology and homotopy computations for cosimplicial objects in finite categories."""

__version__ = "0.1.0"

from .acyclic_models import build_P, theorem1_pipeline, verify_homotopy_invariance, verify_prism
from .complexes import attach_handle, boundary_sphere, build_cw, colim_cell_complex
from .convexity import check_acyclic, check_axiom_convex, first_vertex_cone, verify_cone
from .cosimplicial import (
    CosimplicialObject,
    check_axiom_1_2,
    check_axiom_join,
    check_axiom_swap,
    finset_cosimplicial,
    sset_cosimplicial,
)
from .fincat import FinSet, TableCategory
from .homology import chain_complex, homology
from .homotopy import HomotopyContext
from .nerve import nerve
from .snf import smith_normal_form, solve_boundary
from .sset import TruncSimplicialSet, TruncSSetCategory

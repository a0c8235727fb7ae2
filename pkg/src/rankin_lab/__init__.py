"""Exact representation-theoretic bookkeeping for Rankin-Selberg
convolutions on GL_n(C) x GL_n(C)."""

from .charring import (
    cartan,
    det_mult_grenie,
    exterior_p,
    invariant_dim,
    pieri,
    prv,
    restrict_to_K,
    tensor,
    triple_mult,
    weyl_dim,
)
from .compat import classify_case, compatible, cond_set, hom_dim_Fxi, mm_stats, verify_lemma_3_4
from .decomposition import Decomposition, TripleDecomposition
from .ltheory import c_mu_nu, critical_places, gamma_shifts, is_critical
from .weights import HalfInt, PureWeight, dual, dominant_rep, k_eta, kappa, validate_pure

__version__ = "0.1.0"

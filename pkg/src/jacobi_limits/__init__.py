"""Exact moments of the unitary Jacobi ensemble and their large-N limits."""
from .asymptotics import (LimitQuery, ik_limit, ik_limit_l1l2, limit_catalan,
                          limit_central_binomial, limit_dyck, limit_novaes, special_case)
from .combinat import (catalan_triangle, divided_difference_coeffs, gimel,
                       inverse_binomial_transform, stirling2, t_transform)
from .errors import ConsistencyError, DomainError
from .oracle import ChainConfig, brute_average, density_ik, mc_sample_pk
from .poly import RationalFunction, UniPoly
from .schur import (Partition, ScalingParams, ik_closed, ik_rf, mn_expand, nk_numerator,
                    plambda_limit, schur_average, schur_limit, selberg_value)

__version__ = "0.1.0"

"""Exact tools for unitary highest-weight modules of u(p,q|n)."""

from .weights import (GeneralizedPartition, Root, Signature, ThetaShift,
                      Weight, bilinear, conjugate, is_dominant, is_integral,
                      lambda_flat, parse_signature, parse_weight, rho,
                      shift_block, shift_scalar, tau_weight)
from .algebra import (AlgebraElement, MatrixUnit, bracket, dual_star, killing,
                      root_class, star, star_killing_check, tau)
from .classify import (IntegralVerdict, Verdict, check_U, classical_upq,
                       dual_unitary_lowest, gamma, gamma_bound_sufficient,
                       gl_nqp_dual_unitary_highest, gl_nqp_unitary_lowest,
                       integral_classify, intuni_construction, is_typical,
                       kmod_type1, lambda_bar, lambda_qn, pqrs_is_trivial_only,
                       type1_finite, type2_finite)
from .verma import (GramReport, VermaModule, certify, enumerate_drops,
                    gamma_action_check, gram, psd_exact, weight_space_basis)
from .oscillator import (act_gl, act_gld, commutation_fuzz, herm, joint_hwv,
                         psi_sigma_check)

__version__ = '0.1.0'

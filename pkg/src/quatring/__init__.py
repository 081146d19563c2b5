"""Exact arithmetic in ZQ_4n and certificates for a stably free nonfree ideal over ZQ_28."""

from ._kernels import BACKEND
from .groupring import (GroupElement, GroupParams, ParameterError, RingElement,
                        augmentation, gens, left_mult_matrix, mul_group,
                        norm_element, right_mult_matrix, ring_add, ring_mul,
                        special_elements)
from .zlattice import (IntegerLattice, SnfResult, hnf, image, kernel,
                       lattice_intersect, lattice_sum, membership,
                       quotient_invariants, snf)

__version__ = "0.1.0"

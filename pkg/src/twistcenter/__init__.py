"""Exact combinatorics of the center of twisted affine quantum algebras at odd roots of 1."""
from .cartan import Family, TwistedType, build_type, cartan_matrix, delta_marks, parse_type, symmetrizers
from .center import (
    center_generators,
    det_hr,
    graded_center_dim,
    highest_coeff_mult,
    jsets,
    pz_relation,
    star_coeffs,
    ziz_bound,
)
from .errors import DomainError, OutOfRange, ResourceLimit
from .pbw import PartitionTable, enumerate_partitions, par
from .qlaurent import CycloElement, LaurentPoly, eval_at_eps, mult_eps, qbinom, qint
from .roots import classify, imaginary_slots, l_alpha, real_roots_upto

__version__ = "0.1.0"

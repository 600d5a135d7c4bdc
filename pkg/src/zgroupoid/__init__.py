"""Finite-scale model of C(X), the action groupoid of its unit group on a
maximal ideal, and the induced dynamics on measures."""
from .space import FiniteSpace, IntervalModel, ball, make_circle_space
from .algebra import Func, MaximalIdeal, ZeroSet, ideal_member, is_unit, lattice_ops, z_filter, zero_set
from .action import UnitElement, cozero_translation, multiplicative_action, normalized_action, tau
from .groupoid import (
    Arrow, FibreMeasure, GroupoidInstance, build_instance, check_quasi_invariance, cocycle,
    cocycle_residual, compose, fibre_measure, inverse, source, target,
)
from .measure import (
    Measure, MeasureClass, dirac, disintegrate, push_forward, rn_decomposition_invariance,
    rn_derivative, same_class,
)
from .tangent import BlowupNet, HybridMeasure, homothety_push, tan_closure_check, tangent_net
from .dynamics import (
    ErgodicDecomposition, Transformation, birkhoff_average, ergodic_decompose, invariant_limit_check,
    is_ergodic, is_invariant,
)
from .orbits import SectionReport, Stratum, classify, properness_report, section, stratify, trueness_check

__version__ = "0.1.0"

"""Compressed zero-divisor graphs of finite rings and of matrix rings over F_q."""
from .gf import FieldElement, FieldSpec, automorphisms, field_of_order, make_field
from .subspace import (
    Matrix,
    Subspace,
    contains,
    enumerate_subspaces,
    image,
    intersect,
    kernel,
    q_binomial,
    rref,
    subspace_sum,
)
from .digraph import (
    CapacityError,
    Digraph,
    PropertyViolation,
    TypePartition,
    cl_s,
    cl_t,
    isomorphic_small,
    n_minus,
    n_plus,
    opposite_vertex,
    tensor_product,
    type_partition,
)
from .finring import (
    RingSpec,
    ThetaClass,
    parse_ring,
    ring_matrix,
    ring_product,
    ring_zmod,
    theta_classes,
    theta_graph,
    theta_hom,
    units,
)
from .theta_matrix import PairVertex, ThetaMatrixGraph, build

__version__ = "0.1.0"

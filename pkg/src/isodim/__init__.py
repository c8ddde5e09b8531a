"""Exact linear algebra built on isomorphic dimension."""

from isodim.core.errors import IsodimError, MembershipError, ParseError, PreconditionError
from isodim.core.field import FieldElement, FieldSpec, parse_field_spec
from isodim.core.matrix import Matrix, kernel_basis, rank, rref, solve
from isodim.maps.linear_map import LinearMap, from_images, image, kernel
from isodim.procedures.classify import classify
from isodim.procedures.dimension import build_injective_sequence, isomorphic_dimension, rank_nullity
from isodim.spaces.quotient import QuotientSpace, coset_rep
from isodim.spaces.space import Space, span_of

__all__ = [
    'FieldElement',
    'FieldSpec',
    'IsodimError',
    'LinearMap',
    'Matrix',
    'MembershipError',
    'ParseError',
    'PreconditionError',
    'QuotientSpace',
    'Space',
    'build_injective_sequence',
    'classify',
    'coset_rep',
    'from_images',
    'image',
    'isomorphic_dimension',
    'kernel',
    'kernel_basis',
    'parse_field_spec',
    'rank',
    'rank_nullity',
    'rref',
    'solve',
    'span_of',
]

__version__ = '0.1.0'

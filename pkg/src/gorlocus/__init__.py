"""
The gorlocus module.
"""

from .__version__ import __version__

from .api import algebra, embed, entry, family, ideal
from .fields import QQ, FieldError, ModInt, PrimeField, RationalField, parse_field
from .polyring import (
    MonomialOrder,
    NotSkewSymmetricError,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
    det3,
    elimination_order,
    pfaffians_4x4,
)
from .parser import ParseError, format_polynomial, parse_ideal_text, parse_polynomial
from .groebner import (
    Ideal,
    NotZeroDimensionalError,
    buchberger,
    ideal_equal,
    ideal_intersect,
    normal_form,
    syzygies,
)
from .artin import (
    NotGorensteinError,
    NotLocalError,
    QuotientAlgebra,
    profile,
    quotient_algebra,
    square_zero_profile,
)
from .catalog import CatalogError, CatalogId, FamilyId, listing, presentation
from .nets import NetError, NetOfConics, classify_net, extract_net, weierstrass_net
from .deform import FlatFamilyCertificate, certificate, fiber_scan
from .tangent import (
    EmbeddingError,
    ag_embed,
    h0_normal_affine,
    h0_normal_projective,
    tangent_report,
)
from .timer import Timer
from .config import ConfigError, RunConfig
from .report import Check, Report, emit
from .suite import analyze, run_suite

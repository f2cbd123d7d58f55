"""Exact classification of minimal-degeneration singularities of Schubert
varieties in affine Grassmannians."""

__version__ = "0.1.0"

from .rootdata import (  # noqa: F401
    Coweight,
    RootDatum,
    build,
    dominance_leq,
    langlands_dual,
    levi_restrict,
    pairing_2rho,
    parse_coweight,
    support,
)
from .poset import (  # noqa: F401
    DegenerationCase,
    covers_of,
    interval,
    is_minimal_degeneration,
    stembridge_classify,
)
from .mult import StalkPolynomial, freudenthal, q_kostant, rationally_smooth, stalk_poly  # noqa: F401
from .affweyl import AffineRoot, AffineWeylElement, bruhat_leq, max_coset_element  # noqa: F401
from .equivmult import (  # noqa: F401
    KumarVerdict,
    NilHeckeElement,
    SliceMultiplicity,
    demazure_generator,
    kumar_test,
    nilhecke_coefficients,
    point_multiplicity,
    slice_multiplicity,
)
from .ratfunc import LinForm, RatFunc, SparsePoly, parse  # noqa: F401
from .report import DegenerationReport, VerificationError, classify, smooth_locus_verify, survey  # noqa: F401

"""Seifert-matrix invariants and genus bounds for iterated Bing doubles."""

from .bing import (
    BingTree,
    RewriteTrace,
    apply_covering_A,
    apply_covering_B,
    block_identical,
    full_tree,
    parse_tree,
    reduce_to_companion,
    replay,
)
from .bounds import (
    GenusBoundReport,
    b4_profile,
    concordance_bound,
    full_report,
    infinite_order_check,
    s3_boundary_genus,
)
from .catalog import DEFAULT_CATALOG, KnotCatalog
from .errors import BingBoundError
from .expression import evaluate, parse, to_text
from .invariants import (
    AlexanderPolynomial,
    alexander,
    g3_certify,
    murasugi_signature,
    nu_from_name,
    sigma_nu,
    sigma_ratio_nu,
    signature_at,
    tau_nu,
)
from .seifert import SeifertMatrix, torus_knot, twist_knot
from .signature_function import SignatureFunction, signature_function

__version__ = "0.1.0"

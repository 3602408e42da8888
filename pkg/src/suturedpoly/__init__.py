"""Exact-rational convex geometry for sutured-manifold invariants.

Core layers:

* :mod:`suturedpoly.linalg`: exact vectors, covectors, pairing, solving
* :mod:`suturedpoly.polytope`: hulls, facets, faces, labeled supports
* :mod:`suturedpoly.cones`: dual vertex cones, extremal rays, fan checks
* :mod:`suturedpoly.norms`: support functions, seminorms, polar balls
* :mod:`suturedpoly.foxcalc`: free words, Fox derivatives, determinants
* :mod:`suturedpoly.corpus`: built-in worked examples

Front ends: a FastAPI service (:mod:`suturedpoly.service`) and a thin CLI
client (:mod:`suturedpoly.cli`).
"""

from .linalg import Covector, Matrix, Rational, Vector, pairing
from .polytope import (
    Face,
    FacetDescription,
    LabeledSupport,
    PointSet,
    Polytope,
    SupportRank,
    convex_hull,
    face_in_direction,
    facets,
    translate,
    vertex_centroid,
)
from .cones import (
    DualConeSystem,
    FoliationConeSet,
    PolyhedralCone,
    dual_cones,
    extremal_rays,
    extremal_vertex_for,
    fan_check,
    foliation_cones,
    membership,
)
from .norms import (
    NormBall,
    SupportEvaluation,
    SurfaceComplexityData,
    SurfaceComponent,
    TrivializationSummand,
    c_S_t,
    chi_beta,
    chi_minus,
    chi_s_minus,
    index_from_suture_count,
    support_min,
    unit_ball,
    y_seminorm,
    y_t,
    z_symmetrized,
)
from .foxcalc import (
    AbelianizationMap,
    FreeWord,
    GroupPresentation,
    LaurentPolynomial,
    alexander_matrix,
    alexander_polynomial,
    fox_derivative,
    jacobian_determinant,
    labeled_support,
    newton_polytope,
)
from .corpus import NamedExample, example_names, load_example

__version__ = "0.1.0"

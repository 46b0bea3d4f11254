"""Helicoidal surfaces in Minkowski 3-space built from non-lightlike frontals.

The package covers the whole pipeline: expression strings are compiled into
truncated Taylor jets, a profile pair (gamma, nu) is checked to be a
Legendre curve, the surface is swept and its singular points are
classified as (i, j)-cuspidal edges by two independent routes, and meshes
and singular loci are exported for plotting.
"""
from .curvespec import CurveSpec, bundled_names, load_spec, load_surface
from .errors import (CurveValidationError, DeltaNotOneError, DomainError, FrontalError,
                     NotSingularError, ParseError)
from .exprdsl import Expression, compile_expr, parse
from .helicoid import HelicoidalSurface, Kind
from .jet import Jet
from .legendre import LegendreCurve, validate
from .minkowski import CausalCharacter, pseudo_dot, pseudo_wedge
from .singularity import (CuspType, classify_cusp, classify_cuspidal_edge,
                          classify_surface, find_singular_points)
from .tolerance import ToleranceSpec, default_tolerance

__version__ = "0.1.0"

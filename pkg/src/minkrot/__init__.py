"""Minkowski Gaussian and mean curvature of rotational surfaces.

The normed space has unit sphere ``(x1^2 + x2^2)^m + x3^(2m) = 1``.  The
package provides the closed-form Birkhoff-Gauss map and curvatures, endpoint
singular quadrature for the profile integrals, builders for the minimal,
constant-K and constant-H profiles (catenoid, spheres, pseudo-spheres,
unduloid, nodoid), numerical oracles, and mesh/CSV export.
"""
from .norm import NormSpace, as_vec3, grad_phi, is_birkhoff_orthogonal, minkowski_norm, phi
from .curvature import (CurvaturePair, ProfilePoint, ShapeCoefficients, a_quantity, birkhoff_gauss,
                        curvatures_general, curvatures_graph, curvatures_graph_fold, is_flat,
                        shape_coefficients, surface_tangents)
from .quadrature import (DivergentIntegralError, QuadratureError, QuadratureResult, SingularIntegrand,
                         adaptive_gk, integrate_endpoint_singular, tanh_sinh)
from .cases import CaseInfo, CaseTag, classify_constantH, classify_constantK
from .integrals import (constantH_d1, constantH_extent, constantH_integrand, constantH_profile_u,
                        constantK_extent, constantK_integrand, constantK_profile_u, minimal_d1,
                        minimal_integrand, minimal_profile_u, nodoid_d3, unduloid_d2)
from .branches import MonotoneBranch, invert_branch
from .profiles import (GluedCurve, GraphCurve, Junction, Nodoid, PeriodicCurve, SingularEndpoint,
                       Unduloid, build_constantH_curve, build_constantK_curve, build_minimal_catenoid,
                       build_nodoid, build_unduloid, verify_c2_junction)
from .oracle import (BirkhoffSolution, FdReport, fd_shape_operator, numeric_birkhoff_gauss,
                     ode_residual, sphere_identity_check)
from .mesh import SurfaceMesh, tessellate, write_attributes_csv, write_obj, write_profile_csv

__version__ = "0.1.0"

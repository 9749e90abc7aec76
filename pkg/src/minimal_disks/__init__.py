"""Embedded minimal disks with curvature blow-up at one point.

Weierstrass representation engine, the ``arctan`` family of embedded
minimal disks, its ``a -> 0`` limit and the numerical certificates for
their embedding, blow-up and spiralling behaviour.
"""

__version__ = "0.1.0"

from .errors import (DecompositionFailure, DomainViolation, EndpointMismatch,
                     MinimalDiskError, NonConvergence, NonFiniteField, PoleHit,
                     RootNotBracketed, SinkFailure, UnsupportedData,
                     ZeroDensity)
from .family import (DomainSpec, FamilyParameter, SeparationCertificate,
                     SliceCurve, canonical_path, curvature_Ka, estimate_r0,
                     eval_dzh, eval_h, immerse_Fa, omega, omega_contains,
                     separation, slice_curve, vertical_normal_locus)
from .limit import (ConvergenceReport, SubsequenceChoice, blowup_report,
                    convergence_report, immerse_limit, limit_exponent,
                    select_subsequence, winding_count)
from .mesh import SurfaceMesh, decompose_multigraph, sample_mesh
from .export import ReportDocument, export_mesh
from .quadrature import integrate_segment
from .weierstrass import (GaussData, PolyPath, SurfaceSample, differential,
                          gauss_curvature, immerse, path_independence_residual,
                          unit_normal)

"""Numerical toolkit for the disk family defined by Re(z h''/(alpha h')) < 1/2.

Members are built from finite atomic measures on the unit circle, correspond
bijectively to finite Blaschke products through the boundary roots of
z*phi(z) = 1, satisfy sharp pre-Schwarzian/Schwarzian norm bounds, and serve
as analytic parts of sheared univalent harmonic mappings.
"""

from .blaschke import (BlaschkeProduct, BoundaryRootSet, boundary_roots,
                       normalized_prefactor, phase_function)
from .complexfn import (ConvergenceError, DiskGrid, DomainError, NormEstimate,
                        cauchy_coefficients, default_grid, principal_power,
                        sup_norm_estimate)
from .family import (AtomicMeasure, GAlphaFunction, blaschke_from_measure,
                     from_blaschke, induced_self_map, measure_from_blaschke,
                     measure_from_roots, roots_of_unity_measure, single_atom)
from .harmonic import (DilatationSpec, HarmonicMap, InconclusiveProbeError,
                       univalence_criterion, winding_injectivity_probe,
                       winding_number)
from .schwarz import (SchwarzianBoundWitness, SchwarzReport, norms,
                      pre_schwarzian, schwarzian, schwarzian_bound_witness)
from .specfile import (FunctionSpec, SpecFileError, load_function_spec,
                       save_function_spec)
from .verify import Tolerances, VerifyReport, blaschke_roundtrip_error, run_verification

__version__ = "0.1.0"

__all__ = [
    "AtomicMeasure",
    "BlaschkeProduct",
    "BoundaryRootSet",
    "ConvergenceError",
    "DilatationSpec",
    "DiskGrid",
    "DomainError",
    "FunctionSpec",
    "GAlphaFunction",
    "HarmonicMap",
    "InconclusiveProbeError",
    "NormEstimate",
    "SchwarzReport",
    "SchwarzianBoundWitness",
    "SpecFileError",
    "Tolerances",
    "VerifyReport",
    "blaschke_from_measure",
    "blaschke_roundtrip_error",
    "boundary_roots",
    "cauchy_coefficients",
    "default_grid",
    "from_blaschke",
    "induced_self_map",
    "load_function_spec",
    "measure_from_blaschke",
    "measure_from_roots",
    "normalized_prefactor",
    "norms",
    "phase_function",
    "pre_schwarzian",
    "principal_power",
    "roots_of_unity_measure",
    "run_verification",
    "save_function_spec",
    "schwarzian",
    "schwarzian_bound_witness",
    "single_atom",
    "sup_norm_estimate",
    "univalence_criterion",
    "winding_injectivity_probe",
    "winding_number",
]

"""Load and save function-spec files (JSON) describing family members.

A spec carries alpha plus exactly one function source -- an atom list or a
Blaschke product -- and optionally a dilatation for harmonic shears:

    {"alpha": 0.5,
     "atoms": [{"theta": 0.0, "weight": 0.25}, {"theta": 3.14159, "weight": 0.75}],
     "dilatation": {"kind": "constant", "params": {"value": {"re": 0.1, "im": 0.0}}}}

    {"alpha": 0.5, "blaschke": {"zeros": [{"re": 0.5, "im": 0.0}],
                                "prefactor_angle": 0.0}}

Angles are radians.  All module invariants are enforced on load; floats are
written with Python's shortest round-trip repr, so load -> save -> load is
an identity on the in-memory values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .blaschke import BlaschkeProduct
from .family import AtomicMeasure, GAlphaFunction, measure_from_blaschke
from .harmonic import DilatationSpec


class SpecFileError(ValueError):
    """A spec file is malformed or violates a constructor invariant."""


@dataclass(frozen=True)
class FunctionSpec:
    """In-memory form of a spec file; exactly one of measure/blaschke is set."""

    alpha: float
    measure: AtomicMeasure | None = None
    blaschke: BlaschkeProduct | None = None
    dilatation: DilatationSpec | None = None

    def __post_init__(self) -> None:
        if (self.measure is None) == (self.blaschke is None):
            raise SpecFileError("exactly one of atoms/blaschke must be present")

    def resolve_member(self) -> GAlphaFunction:
        """The family member: direct for atoms, via boundary roots for blaschke."""
        measure = (self.measure if self.measure is not None
                   else measure_from_blaschke(self.blaschke))
        return GAlphaFunction(alpha=self.alpha, measure=measure)


def _complex_from(obj, where: str) -> complex:
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (TypeError, KeyError, ValueError):
        raise SpecFileError(f"{where} must be an object with re/im numbers") from None


def _complex_to(value: complex) -> dict:
    return {"re": float(value.real), "im": float(value.imag)}


def spec_from_dict(data: dict) -> FunctionSpec:
    """Build a FunctionSpec from parsed JSON, enforcing every invariant."""
    if not isinstance(data, dict):
        raise SpecFileError("spec must be a JSON object")
    if "alpha" not in data:
        raise SpecFileError("spec must provide alpha")
    try:
        alpha = float(data["alpha"])
    except (TypeError, ValueError):
        raise SpecFileError("alpha must be a number") from None
    if not (np.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise SpecFileError("alpha must lie in (0, 1]")

    measure = None
    phi = None
    if "atoms" in data:
        atoms = data["atoms"]
        if not isinstance(atoms, list) or not atoms:
            raise SpecFileError("atoms must be a nonempty list")
        try:
            angles = [float(a["theta"]) for a in atoms]
            weights = [float(a["weight"]) for a in atoms]
        except (TypeError, KeyError, ValueError):
            raise SpecFileError("every atom needs numeric theta and weight") from None
        measure = _wrap(lambda: AtomicMeasure(angles=angles, weights=weights))
    if "blaschke" in data:
        raw = data["blaschke"]
        if not isinstance(raw, dict) or "zeros" not in raw:
            raise SpecFileError("blaschke must be an object with a zeros list")
        zeros = [_complex_from(b, "blaschke zero") for b in raw["zeros"]]
        prefactor = np.exp(1j * float(raw.get("prefactor_angle", 0.0)))
        phi = _wrap(lambda: BlaschkeProduct(zeros=np.asarray(zeros, dtype=complex),
                                            prefactor=prefactor))

    dilatation = None
    if "dilatation" in data:
        dilatation = _dilatation_from(data["dilatation"])

    return FunctionSpec(alpha=alpha, measure=measure, blaschke=phi,
                        dilatation=dilatation)


def _wrap(build):
    try:
        return build()
    except SpecFileError:
        raise
    except (ValueError, RuntimeError) as exc:
        raise SpecFileError(str(exc)) from exc


def _dilatation_from(raw) -> DilatationSpec:
    if not isinstance(raw, dict) or "kind" not in raw:
        raise SpecFileError("dilatation must be an object with a kind")
    kind = raw["kind"]
    params = raw.get("params", {})
    if not isinstance(params, dict):
        raise SpecFileError("dilatation params must be an object")
    if kind == "constant":
        return _wrap(lambda: DilatationSpec.constant(
            _complex_from(params.get("value"), "dilatation value")))
    if kind == "monomial":
        scale = _complex_from(params.get("scale"), "dilatation scale")
        degree = int(params.get("degree", 1))
        return _wrap(lambda: DilatationSpec.monomial(scale, degree))
    if kind == "polynomial":
        coeffs = params.get("coefficients")
        if not isinstance(coeffs, list) or not coeffs:
            raise SpecFileError("polynomial dilatation needs a coefficients list")
        values = [_complex_from(c, "dilatation coefficient") for c in coeffs]
        return _wrap(lambda: DilatationSpec.polynomial(values))
    if kind == "blaschke_scaled":
        scale = _complex_from(params.get("scale"), "dilatation scale")
        zeros = params.get("zeros")
        if not isinstance(zeros, list):
            raise SpecFileError("blaschke_scaled dilatation needs a zeros list")
        zs = [_complex_from(b, "dilatation zero") for b in zeros]
        prefactor = np.exp(1j * float(params.get("prefactor_angle", 0.0)))
        return _wrap(lambda: DilatationSpec.blaschke_scaled(
            scale, BlaschkeProduct(zeros=np.asarray(zs, dtype=complex),
                                   prefactor=prefactor)))
    raise SpecFileError(f"unknown dilatation kind {kind!r}")


def spec_to_dict(spec: FunctionSpec) -> dict:
    data: dict = {"alpha": float(spec.alpha)}
    if spec.measure is not None:
        data["atoms"] = [{"theta": float(t), "weight": float(w)}
                         for t, w in zip(spec.measure.angles, spec.measure.weights)]
    if spec.blaschke is not None:
        data["blaschke"] = {
            "zeros": [_complex_to(b) for b in spec.blaschke.zeros],
            "prefactor_angle": float(np.angle(spec.blaschke.prefactor)),
        }
    if spec.dilatation is not None:
        data["dilatation"] = _dilatation_to(spec.dilatation)
    return data


def _dilatation_to(spec: DilatationSpec) -> dict:
    if spec.kind == "constant":
        params: dict = {"value": _complex_to(spec.scale)}
    elif spec.kind == "monomial":
        params = {"scale": _complex_to(spec.scale), "degree": spec.degree}
    elif spec.kind == "polynomial":
        params = {"coefficients": [_complex_to(c) for c in spec.poly_coefficients]}
    else:
        params = {"scale": _complex_to(spec.scale),
                  "zeros": [_complex_to(b) for b in spec.blaschke.zeros],
                  "prefactor_angle": float(np.angle(spec.blaschke.prefactor))}
    return {"kind": spec.kind, "params": params}


def load_function_spec(path: str | Path) -> FunctionSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read spec file: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"spec file is not valid JSON: {exc}") from exc
    return spec_from_dict(data)


def save_function_spec(spec: FunctionSpec, path: str | Path) -> None:
    Path(path).write_text(dumps_spec(spec))


def dumps_spec(spec: FunctionSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2, sort_keys=True) + "\n"

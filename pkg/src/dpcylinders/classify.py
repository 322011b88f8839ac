"""Cylinder existence classification.

Two questions per surface spec: does the anticanonical class admit a
cylinder, and does any ample polarization admit one.  Both answers are
governed by short exclusion lists over the degree and the singularity
collection; everything outside the lists has a cylinder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import DynkinType, SurfaceSpec, picard_rank, validate_spec

_A1 = DynkinType("A", 1)
_A2 = DynkinType("A", 2)
_A3 = DynkinType("A", 3)
_D4 = DynkinType("D", 4)

# Degree-1 collections built from these types never yield an anticanonical
# cylinder; anything containing a bigger type does.
_SMALL_TYPES = frozenset({_A1, _A2, _A3, _D4})

# The only collections (all of rank 8, forcing Picard rank one at degree 1)
# without a cylinder for any polarization.
NO_POLAR_COLLECTIONS: tuple[tuple[DynkinType, ...], ...] = (
    (_A2, _A2, _A2, _A2),
    (_A1, _A1, _A3, _A3),
    (_D4, _D4),
)


@dataclass(frozen=True)
class Verdict:
    anticanonical_cylinder: bool
    h_polar_cylinder: bool
    picard_rank: int
    anticanonical_reason: str
    polar_reason: str


def classify_anticanonical(spec: SurfaceSpec) -> tuple[bool, str]:
    """Whether the anticanonical class admits a cylinder, with a reason tag."""
    types = spec.singularities
    if spec.degree == 3 and not types:
        return False, "smooth-cubic"
    if spec.degree == 2 and all(t == _A1 for t in types):
        return False, "only-A1-at-degree-2"
    if spec.degree == 1 and all(t in _SMALL_TYPES for t in types):
        return False, "only-small-singularities-at-degree-1"
    return True, "outside-excluded-list"


def classify_polar(spec: SurfaceSpec) -> tuple[bool, str]:
    """Whether some ample polarization admits a cylinder, with a reason tag."""
    anticanonical, _ = classify_anticanonical(spec)
    if anticanonical:
        return True, "anticanonical-cylinder-transfers"
    if picard_rank(spec) == 1 and spec.singularities in NO_POLAR_COLLECTIONS:
        return False, "rank-one-excluded-collection"
    return True, "ample-polarization-exists"


def classify(spec: SurfaceSpec) -> Verdict:
    spec = validate_spec(spec.degree, spec.singularities)
    anticanonical, a_reason = classify_anticanonical(spec)
    polar, p_reason = classify_polar(spec)
    return Verdict(
        anticanonical_cylinder=anticanonical,
        h_polar_cylinder=polar,
        picard_rank=picard_rank(spec),
        anticanonical_reason=a_reason,
        polar_reason=p_reason,
    )


def cross_check(spec: SurfaceSpec) -> tuple[str, ...]:
    """Reconcile the classification with the construction engine.

    Returns violation messages; empty means the two agree: every cylinder
    verdict is backed by a certified construction, every refusal by the
    engine declining to build.
    """
    from .tigers import NoCaseApplies, build_tiger  # local: avoids an import cycle

    verdict = classify(spec)
    violations = []
    if verdict.anticanonical_cylinder:
        try:
            cert = build_tiger(spec)
        except NoCaseApplies as exc:
            violations.append(f"{spec}: cylinder claimed but no case applies ({exc})")
        else:
            if cert.status != "certified":
                violations.append(
                    f"{spec}: construction left unobstructed decompositions"
                )
            if cert.ratio <= 2:
                violations.append(
                    f"{spec}: ratio {cert.ratio} does not certify the pair"
                )
    else:
        try:
            build_tiger(spec)
        except NoCaseApplies:
            pass
        else:
            violations.append(
                f"{spec}: no cylinder expected, yet a construction was produced"
            )
    if not verdict.h_polar_cylinder and verdict.picard_rank != 1:
        violations.append(
            f"{spec}: polar refusal requires Picard rank one, got {verdict.picard_rank}"
        )
    return tuple(violations)

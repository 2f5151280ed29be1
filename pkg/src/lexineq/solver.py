"""Closed-form solvers for the four inequality classes.

Each solver returns a :class:`SolutionSet` whose region chain follows
the derivation step for step, so the emitted JSON can be read against
the construction line by line.  Steps that are exact identities
(rotation by 0, translation by 0) are collapsed, since they change
neither the set nor the arithmetic.

The linear solver divides out the modulus of the leading coefficient
and un-rotates its phase; the fractional solver reduces to an inversion
of a half-plane; the quadratic solver completes the square and takes
the two-valued square-root preimage.  No assumption is made about the
sign or realness of any intermediate quantity: membership is always the
pullback walk, which is correct for all parameter signs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Union

import numpy as np

from . import _kernels
from .errors import DegenerateFractionError, ZeroLeadingCoefficientError
from .lexorder import complex_div, lex_le, polar_decompose, require_finite
from . import _backend
from .region import (
    Invert,
    Membership,
    Region,
    Rotate,
    Sqrt,
    Translate,
    _encode,
    apply_transform,
    contains,
)

__all__ = [
    "Linear",
    "LinearSystem",
    "Fractional",
    "Quadratic",
    "InequalityProblem",
    "SolutionKind",
    "SolutionSet",
    "solve",
    "solve_linear",
    "solve_linear_system",
    "solve_fractional",
    "solve_quadratic",
    "solution_contains",
    "solution_grid",
]


@dataclass(frozen=True)
class Linear:
    """A*Z - B >= 0."""

    a: complex
    b: complex

    def __post_init__(self):
        require_finite(self.a, "coefficient a")
        require_finite(self.b, "coefficient b")


@dataclass(frozen=True)
class LinearSystem:
    """A*Z - B >= 0 and C*Z - D >= 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            require_finite(getattr(self, name), f"coefficient {name}")


@dataclass(frozen=True)
class Fractional:
    """(A*Z + B) / (Z + C) >= D.

    The solvable case needs B - A*C != 0; the degenerate case (the
    expression is constant where defined) is accepted here and handled
    by :func:`solve_fractional`.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            require_finite(getattr(self, name), f"coefficient {name}")


@dataclass(frozen=True)
class Quadratic:
    """A*Z^2 + B*Z + C >= 0 with A != 0."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("a", "b", "c"):
            require_finite(getattr(self, name), f"coefficient {name}")


InequalityProblem = Union[Linear, LinearSystem, Fractional, Quadratic]


class SolutionKind(str, Enum):
    SINGLE = "single"
    INTERSECTION = "intersection"
    ALL = "all"
    EMPTY = "empty"


@dataclass(frozen=True)
class SolutionSet:
    """Solver output: one region, an intersection of regions, or a
    constant answer, plus pole points removed from the set."""

    kind: SolutionKind
    regions: tuple[Region, ...] = field(default=())
    excluded_points: tuple[complex, ...] = field(default=())
    note: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "regions", tuple(self.regions))
        object.__setattr__(self, "excluded_points", tuple(self.excluded_points))
        if self.kind is SolutionKind.SINGLE and len(self.regions) != 1:
            raise ValueError("single solutions carry exactly one region")
        if self.kind is SolutionKind.INTERSECTION and len(self.regions) < 2:
            raise ValueError("intersections carry at least two regions")
        if self.kind in (SolutionKind.ALL, SolutionKind.EMPTY) and self.regions:
            raise ValueError("constant solutions carry no regions")

    @classmethod
    def single(cls, region, excluded_points=(), note=None):
        return cls(SolutionKind.SINGLE, (region,), tuple(excluded_points), note)

    @classmethod
    def intersection(cls, regions, excluded_points=(), note=None):
        return cls(SolutionKind.INTERSECTION, tuple(regions), tuple(excluded_points), note)

    @classmethod
    def universe(cls, excluded_points=(), note=None):
        return cls(SolutionKind.ALL, (), tuple(excluded_points), note)

    @classmethod
    def empty(cls, excluded_points=(), note=None):
        return cls(SolutionKind.EMPTY, (), tuple(excluded_points), note)


def solve_linear(a: complex, b: complex) -> SolutionSet:
    """Solve A*Z - B >= 0.

    For A = r*e^{i theta} with r > 0 the solution is the base
    half-plane at B/r un-rotated by theta.  A = 0 degenerates to a
    constant inequality.
    """
    require_finite(a, "coefficient a")
    require_finite(b, "coefficient b")
    if a == 0:
        if lex_le(b, 0j):  # -B >= 0
            return SolutionSet.universe(note="zero leading coefficient; inequality is constant")
        return SolutionSet.empty(note="zero leading coefficient; inequality is constant")
    pol = polar_decompose(a)
    anchor = complex(b.real / pol.r, b.imag / pol.r)
    region = Region(anchor)
    if pol.theta != 0.0:
        region = apply_transform(region, Rotate(-pol.theta))
    return SolutionSet.single(region)


def solve_linear_system(a: complex, b: complex, c: complex, d: complex) -> SolutionSet:
    """Solve A*Z - B >= 0 and C*Z - D >= 0 as an intersection."""
    first = solve_linear(a, b)
    second = solve_linear(c, d)
    if first.kind is SolutionKind.EMPTY or second.kind is SolutionKind.EMPTY:
        return SolutionSet.empty(note="one constraint is constantly false")
    if first.kind is SolutionKind.ALL:
        return second
    if second.kind is SolutionKind.ALL:
        return first
    return SolutionSet.intersection(first.regions + second.regions)


def solve_fractional(a: complex, b: complex, c: complex, d: complex,
                     strict: bool = False) -> SolutionSet:
    """Solve (A*Z + B) / (Z + C) >= D.

    With r*e^{i theta} := B - A*C the solution is the inversion of the
    half-plane at (D - A)/r, rotated by theta and translated by -C; the
    pole Z = -C is excluded.  When B - A*C = 0 the expression is the
    constant A wherever it is defined; by default that constant
    inequality is answered directly (with a note), or rejected when
    ``strict`` is set.
    """
    for name, v in (("a", a), ("b", b), ("c", c), ("d", d)):
        require_finite(v, f"coefficient {name}")
    w = b - a * c
    pole = complex(-c.real + 0.0, -c.imag + 0.0)  # normalize -0.0 away
    if w == 0:
        if strict:
            raise DegenerateFractionError(
                "B - A*C = 0: the fraction is constant where defined"
            )
        note = "degenerate fraction (B - A*C = 0): value is the constant A away from the pole"
        if lex_le(d, a):  # constant A >= D
            return SolutionSet.universe(excluded_points=(pole,), note=note)
        return SolutionSet.empty(excluded_points=(pole,), note=note)
    pol = polar_decompose(w)
    anchor = complex((d - a).real / pol.r, (d - a).imag / pol.r)
    region = Region(anchor, (Invert(),))
    if pol.theta != 0.0:
        region = apply_transform(region, Rotate(pol.theta))
    if pole != 0:
        region = apply_transform(region, Translate(pole))
    return SolutionSet.single(region, excluded_points=(pole,))


def solve_quadratic(a: complex, b: complex, c: complex) -> SolutionSet:
    """Solve A*Z^2 + B*Z + C >= 0 with A != 0.

    Completing the square gives e^{i theta} (Z + B/2A)^2 >=
    (B^2 - 4AC)/(4rA) with A = r*e^{i theta}; the solution is the
    square-root preimage of that half-plane, un-rotated by theta/2 and
    translated by -B/2A.  The discriminant quotient is computed in full
    complex arithmetic.
    """
    for name, v in (("a", a), ("b", b), ("c", c)):
        require_finite(v, f"coefficient {name}")
    if a == 0:
        raise ZeroLeadingCoefficientError("leading coefficient is zero; use solve_linear")
    pol = polar_decompose(a)
    shift = -complex_div(b, 2 * a)
    disc = b * b - 4 * a * c
    anchor = complex_div(disc, complex(4 * pol.r * a.real, 4 * pol.r * a.imag))
    region = Region(anchor, (Sqrt(),))
    half = pol.theta / 2.0
    if half != 0.0:
        region = apply_transform(region, Rotate(-half))
    if shift != 0:
        region = apply_transform(region, Translate(shift))
    return SolutionSet.single(region)


def solve(problem: InequalityProblem, strict: bool = False) -> SolutionSet:
    """Dispatch a classified problem to its solver."""
    if isinstance(problem, Linear):
        return solve_linear(problem.a, problem.b)
    if isinstance(problem, LinearSystem):
        return solve_linear_system(problem.a, problem.b, problem.c, problem.d)
    if isinstance(problem, Fractional):
        return solve_fractional(problem.a, problem.b, problem.c, problem.d, strict=strict)
    if isinstance(problem, Quadratic):
        return solve_quadratic(problem.a, problem.b, problem.c)
    raise TypeError(f"not an inequality problem: {problem!r}")


def solution_contains(solution: SolutionSet, z: complex) -> Membership:
    """Pointwise membership of a solution set.

    Excluded points are poles; an intersection is In when every region
    is In, and Pole when any region is Pole (the underlying expression
    is undefined there).
    """
    require_finite(z, "probe point")
    for p in solution.excluded_points:
        if z == p:
            return Membership.POLE
    if solution.kind is SolutionKind.ALL:
        return Membership.IN
    if solution.kind is SolutionKind.EMPTY:
        return Membership.OUT
    result = Membership.IN
    for region in solution.regions:
        m = contains(region, z)
        if m is Membership.POLE:
            return Membership.POLE
        if m is Membership.OUT:
            result = Membership.OUT
    return result


def solution_grid(solution: SolutionSet, zr: np.ndarray, zi: np.ndarray) -> np.ndarray:
    """Vectorized :func:`solution_contains` over flat coordinate arrays."""
    codes, _ = solution_grid_margin(solution, zr, zi)
    return codes


def solution_grid_margin(solution: SolutionSet, zr: np.ndarray,
                         zi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Membership codes plus the solution side's boundary margins.

    The margin is the deciding component of the pulled-back value in
    each region's base half-plane test (smallest constituent for an
    intersection); constant solutions and pole points report an
    infinite margin.
    """
    zr = np.ascontiguousarray(zr, dtype=np.float64)
    zi = np.ascontiguousarray(zi, dtype=np.float64)
    if solution.kind is SolutionKind.ALL:
        codes = np.full(zr.shape, _kernels.IN, dtype=np.uint8)
        margins = np.full(zr.shape, np.inf)
    elif solution.kind is SolutionKind.EMPTY:
        codes = np.full(zr.shape, _kernels.OUT, dtype=np.uint8)
        margins = np.full(zr.shape, np.inf)
    else:
        codes, margins = _region_grid_margin(solution.regions[0], zr, zi)
        for region in solution.regions[1:]:
            other, other_m = _region_grid_margin(region, zr, zi)
            pole = (codes == _kernels.POLE) | (other == _kernels.POLE)
            both_in = (codes == _kernels.IN) & (other == _kernels.IN)
            codes = np.where(both_in, _kernels.IN, _kernels.OUT).astype(np.uint8)
            codes[pole] = _kernels.POLE
            margins = np.minimum(margins, other_m)
            margins[pole] = np.inf
    for p in solution.excluded_points:
        hit = (zr == p.real) & (zi == p.imag)
        codes[hit] = _kernels.POLE
        margins[hit] = np.inf
    return codes, margins


def _region_grid_margin(region: Region, zr, zi):
    a1, a2, kinds, pa, pb = _encode(region)
    return _backend.region_grid_margin(a1, a2, kinds, pa, pb, zr, zi)

"""Brute-force ground truth for the solvers.

``eval_direct`` evaluates an inequality's left-hand expression at a
point with plain complex arithmetic and compares against zero in
dictionary order.  It knows nothing about regions or solution chains,
so any solver bug shows up as a disagreement when :func:`verify` sweeps
a grid and compares both answers pointwise.

Probes too close to the order's decision boundary are excluded by a
margin test rather than asserted: two different but mathematically
equivalent float computations may legitimately round to different sides
there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from . import _backend, _kernels
from .errors import PoleError
from .lexorder import require_finite
from .region import Membership, Region, membership_grid
from .solver import (
    Fractional,
    InequalityProblem,
    Linear,
    LinearSystem,
    Quadratic,
    SolutionSet,
    solution_grid_margin,
)

__all__ = [
    "DEFAULT_EPS",
    "GridSpec",
    "Bitmap",
    "Mismatch",
    "VerificationReport",
    "default_grid",
    "eval_direct",
    "boundary_margin",
    "problem_grid",
    "verify",
    "sample_raster",
]

DEFAULT_EPS = 1e-6


@dataclass(frozen=True)
class GridSpec:
    """Rectangular probe window with per-axis sample counts."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("window bounds must satisfy re_min < re_max and im_min < im_max")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("sample counts must be >= 2")

    def re_axis(self) -> np.ndarray:
        return _axis(self.re_min, self.re_max, self.nx)

    def im_axis(self) -> np.ndarray:
        return _axis(self.im_min, self.im_max, self.ny)

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Flat coordinate arrays, row-major: imaginary axis outer, real inner."""
        re = self.re_axis()
        im = self.im_axis()
        zr = np.tile(re, self.ny)
        zi = np.repeat(im, self.nx)
        return zr, zi

    @property
    def cell_diagonal(self) -> float:
        dx = (self.re_max - self.re_min) / (self.nx - 1)
        dy = (self.im_max - self.im_min) / (self.ny - 1)
        return math.hypot(dx, dy)


def _axis(lo: float, hi: float, n: int) -> np.ndarray:
    """Endpoint-inclusive axis by exact interpolation.

    ``lo*(1-t) + hi*t`` with t = i/(n-1) makes the endpoints exact and,
    for a symmetric window with an odd count, puts 0.0 exactly on the
    grid (t = 0.5 is an exact binary value).  ``linspace`` does not
    guarantee that.
    """
    t = np.arange(n, dtype=np.float64) / (n - 1)
    return lo * (1.0 - t) + hi * t


def default_grid() -> GridSpec:
    """The default verification window: [-5, 5]^2 at 201 x 201."""
    return GridSpec(-5.0, 5.0, -5.0, 5.0, 201, 201)


@dataclass(frozen=True, eq=False)
class Bitmap:
    """Membership raster; ``cells`` is row-major uint8 of length nx*ny.

    Row i holds the points with the i-th imaginary coordinate
    (ascending), columns run along the real axis.
    """

    grid: GridSpec
    cells: np.ndarray

    def __post_init__(self):
        if self.cells.shape != (self.grid.nx * self.grid.ny,):
            raise ValueError("cells length must equal nx*ny")

    def to_pgm(self) -> str:
        """Plain portable graymap: header P2, values 0=Out, 1=Pole, 2=In.

        Rows are written top-down (largest imaginary coordinate first)
        so viewers show the plane with the usual orientation.
        """
        g = self.grid
        rows = self.cells.reshape(g.ny, g.nx)
        lines = ["P2", f"{g.nx} {g.ny}", "2"]
        for i in range(g.ny - 1, -1, -1):
            lines.append(" ".join(str(int(v)) for v in rows[i]))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        """CSV with columns re,im,state; states are in/out/pole."""
        g = self.grid
        zr, zi = g.points()
        names = {_kernels.OUT: "out", _kernels.POLE: "pole", _kernels.IN: "in"}
        lines = ["re,im,state"]
        for x, y, c in zip(zr.tolist(), zi.tolist(), self.cells.tolist()):
            lines.append(f"{x!r},{y!r},{names[c]}")
        return "\n".join(lines) + "\n"


class Mismatch(NamedTuple):
    point: complex
    expected: Membership  # direct evaluation
    got: Membership       # region/solution membership


@dataclass(frozen=True)
class VerificationReport:
    total: int
    skipped_boundary: int
    skipped_pole: int
    mismatches: tuple[Mismatch, ...]
    passed: bool


def _values(problem: InequalityProblem, z: complex) -> tuple[complex, ...]:
    """Left-hand value(s) of the inequality at z; PoleError at a pole."""
    if isinstance(problem, Linear):
        return (problem.a * z - problem.b,)
    if isinstance(problem, LinearSystem):
        return (problem.a * z - problem.b, problem.c * z - problem.d)
    if isinstance(problem, Fractional):
        w = z + problem.c
        if w == 0:
            raise PoleError(f"pole of the fraction at z = {z!r}")
        vr, vi = _kernels.fractional_value(
            problem.a.real, problem.a.imag, problem.b.real, problem.b.imag,
            problem.c.real, problem.c.imag, problem.d.real, problem.d.imag,
            z.real, z.imag,
        )
        return (complex(vr, vi),)
    if isinstance(problem, Quadratic):
        vr, vi = _kernels.quadratic_value(
            problem.a.real, problem.a.imag, problem.b.real, problem.b.imag,
            problem.c.real, problem.c.imag, z.real, z.imag,
        )
        return (complex(vr, vi),)
    raise TypeError(f"not an inequality problem: {problem!r}")


def eval_direct(problem: InequalityProblem, z: complex) -> Membership:
    """Definitional membership: evaluate the expression, compare with 0.

    Consults only complex arithmetic and the dictionary order; never the
    region or solver machinery.
    """
    require_finite(z, "probe point")
    try:
        values = _values(problem, z)
    except PoleError:
        return Membership.POLE
    for v in values:
        if not (v.real > 0.0 or (v.real == 0.0 and v.imag >= 0.0)):
            return Membership.OUT
    return Membership.IN


def boundary_margin(problem: InequalityProblem, z: complex, eps: float = DEFAULT_EPS) -> float:
    """Magnitude of the deciding component of the evaluated value.

    |Re v| when it exceeds eps, else |Im v|; for a system, the smallest
    margin over both constraints.  Raises PoleError at a pole.
    """
    require_finite(z, "probe point")
    values = _values(problem, z)
    return min(_kernels.value_margin(v.real, v.imag, eps) for v in values)


def problem_grid(problem: InequalityProblem, zr: np.ndarray,
                 zi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized direct evaluation: (membership codes, margins).

    The margins here are tie-aware: the real component's magnitude
    whenever it is nonzero (however small), falling back to the
    imaginary component only on an exact tie.  A sub-ulp real residue
    thus reports a tiny margin, marking the decision as resting on
    rounding noise.  They drive :func:`verify`'s skipping; the public
    :func:`boundary_margin` keeps its eps-threshold contract.
    """
    zr = np.ascontiguousarray(zr, dtype=np.float64)
    zi = np.ascontiguousarray(zi, dtype=np.float64)
    if isinstance(problem, Linear):
        return _backend.linear_grid(problem.a.real, problem.a.imag,
                                    problem.b.real, problem.b.imag, zr, zi)
    if isinstance(problem, LinearSystem):
        return _backend.system_grid(problem.a.real, problem.a.imag,
                                    problem.b.real, problem.b.imag,
                                    problem.c.real, problem.c.imag,
                                    problem.d.real, problem.d.imag, zr, zi)
    if isinstance(problem, Fractional):
        return _backend.fractional_grid(problem.a.real, problem.a.imag,
                                        problem.b.real, problem.b.imag,
                                        problem.c.real, problem.c.imag,
                                        problem.d.real, problem.d.imag, zr, zi)
    if isinstance(problem, Quadratic):
        return _backend.quadratic_grid(problem.a.real, problem.a.imag,
                                       problem.b.real, problem.b.imag,
                                       problem.c.real, problem.c.imag, zr, zi)
    raise TypeError(f"not an inequality problem: {problem!r}")


def verify(problem: InequalityProblem, solution: SolutionSet,
           grid: GridSpec | None = None, eps: float = DEFAULT_EPS) -> VerificationReport:
    """Sweep a grid and compare direct evaluation against the solution.

    Pole probes are counted separately and must agree on being poles.
    A probe is skipped as boundary when *either* side's deciding
    component sits within eps of its decision boundary: the two sides
    compute the same mathematical quantity along different float paths,
    and on an exact tie of one path the other may legitimately carry a
    last-ulp residue of either sign.  Every other probe must match
    exactly; mismatches are reported in grid order.
    """
    if grid is None:
        grid = default_grid()
    if not (eps > 0.0):
        raise ValueError("eps must be positive")
    zr, zi = grid.points()
    direct, margins_direct = problem_grid(problem, zr, zi)
    got, margins_solution = solution_grid_margin(solution, zr, zi)
    margins = np.minimum(margins_direct, margins_solution)

    pole = direct == _kernels.POLE
    boundary = ~pole & (margins < eps)
    active = ~pole & ~boundary
    bad = (active & (direct != got)) | (pole & (got != _kernels.POLE))

    mismatches = tuple(
        Mismatch(complex(zr[i], zi[i]), Membership(int(direct[i])), Membership(int(got[i])))
        for i in np.nonzero(bad)[0]
    )
    return VerificationReport(
        total=int(zr.shape[0]),
        skipped_boundary=int(np.count_nonzero(boundary)),
        skipped_pole=int(np.count_nonzero(pole)),
        mismatches=mismatches,
        passed=not mismatches,
    )


def sample_raster(source: Union[Region, InequalityProblem], grid: GridSpec) -> Bitmap:
    """Evaluate membership of a region or inequality at every grid point."""
    zr, zi = grid.points()
    if isinstance(source, Region):
        cells = membership_grid(source, zr, zi)
    elif isinstance(source, (Linear, LinearSystem, Fractional, Quadratic)):
        cells, _ = problem_grid(source, zr, zi)
    else:
        raise TypeError(f"cannot rasterize {source!r}")
    return Bitmap(grid=grid, cells=cells)

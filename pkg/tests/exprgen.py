"""Seeded generator of classifiable inequality ASTs for round-trip and
normalization tests.

All literals and probe points are dyadic rationals (k/16 with small k),
and fractional denominators get power-of-two leading coefficients, so
every evaluation the tests compare is exact in binary floating point
and equality assertions can be bitwise.

Generated trees are parser-canonical: a real literal followed by an
imaginary literal is pre-fused exactly the way the parser folds the
``a + bi`` literal syntax, so printing and re-parsing reproduces the
tree identically.
"""

from __future__ import annotations

import numpy as np

from lexineq.parser import Add, Div, Expr, Lit, Mul, Neg, Pow, SourceExpr, Sub, Var


def dyadic(rng: np.random.Generator, scale: int = 32) -> float:
    return float(rng.integers(-scale, scale + 1)) / 16.0


def dyadic_complex(rng: np.random.Generator, scale: int = 32) -> complex:
    return complex(dyadic(rng, scale), dyadic(rng, scale))


def probe(rng: np.random.Generator) -> complex:
    return dyadic_complex(rng)


def _mk_add(lhs: Expr, op: str, rhs: Expr) -> Expr:
    """Combine two terms the way the parser would, fusing literal syntax."""
    if isinstance(rhs, Lit) and rhs.value.real == 0.0 and rhs.value.imag != 0.0:
        real = None
        if isinstance(lhs, Lit) and lhs.value.imag == 0.0:
            real = lhs.value.real
        elif isinstance(lhs, Neg) and isinstance(lhs.operand, Lit) and lhs.operand.value.imag == 0.0:
            real = -lhs.operand.value.real
        if real is not None:
            imag = rhs.value.imag if op == "+" else -rhs.value.imag
            return Lit(complex(real, imag))
    return Add(lhs, rhs) if op == "+" else Sub(lhs, rhs)


def _lit(rng) -> Lit:
    return Lit(dyadic_complex(rng))


def _linear_poly(rng) -> Expr:
    """A random arrangement that normalizes to degree <= 1."""
    shape = rng.integers(0, 5)
    a, b = _lit(rng), _lit(rng)
    if shape == 0:
        return _mk_add(Mul(a, Var()), "+", b)
    if shape == 1:
        return _mk_add(b, "-", Mul(a, Var()))
    if shape == 2:
        return Mul(a, _mk_add(Var(), "+", b))
    if shape == 3:
        return Neg(_mk_add(Mul(a, Var()), "-", b))
    return _mk_add(_mk_add(Mul(a, Var()), "+", b), "-", Mul(_lit(rng), Var()))


def _quadratic_poly(rng) -> Expr:
    shape = rng.integers(0, 4)
    a, b, c = _lit(rng), _lit(rng), _lit(rng)
    if shape == 0:
        return _mk_add(_mk_add(Mul(a, Pow(Var(), 2)), "+", Mul(b, Var())), "+", c)
    if shape == 1:
        return _mk_add(Mul(a, Mul(Var(), Var())), "+", c)
    if shape == 2:
        return _mk_add(Mul(Pow(Var(), 2), a), "-", Mul(b, Var()))
    return Mul(a, _mk_add(Pow(Var(), 2), "+", b))


def _pow2_lit(rng) -> Lit:
    return Lit(complex(float(2.0 ** rng.integers(-2, 3)) * (1 if rng.random() < 0.5 else -1), 0.0))


def _fraction(rng) -> Expr:
    """(linear) / (linear with power-of-two leading coefficient)."""
    num = _mk_add(Mul(_lit(rng), Var()), "+", _lit(rng))
    s = _pow2_lit(rng)
    den = _mk_add(Mul(s, Var()), "+", _lit(rng))
    return Div(num, den)


def gen_source(rng: np.random.Generator) -> SourceExpr:
    """One classifiable inequality with dyadic-exact evaluation."""
    family = rng.integers(0, 4)
    if family == 0:
        lhs, rhs = _linear_poly(rng), _linear_poly(rng)
    elif family == 1:
        lhs, rhs = _quadratic_poly(rng), _linear_poly(rng)
    elif family == 2:
        lhs, rhs = _fraction(rng), _lit(rng)
    else:
        lhs, rhs = _linear_poly(rng), _lit(rng)
    from lexineq.parser import source_to_text

    expr = SourceExpr(text="", lhs=lhs, rhs=rhs, relation=">=")
    return SourceExpr(text=source_to_text(expr), lhs=lhs, rhs=rhs, relation=">=")


def gen_system(rng: np.random.Generator) -> tuple[SourceExpr, SourceExpr]:
    a = SourceExpr(text="", lhs=_linear_poly(rng), rhs=_lit(rng), relation=">=")
    b = SourceExpr(text="", lhs=_linear_poly(rng), rhs=_lit(rng), relation=">=")
    return (a, b)

"""Shared fixture data: the three-dimensional worked surface and the small
divisor zoo used across the suite."""

from fractions import Fraction

import pytest

from logdiv.algebra import Poly, parse_poly
from logdiv.divisor import LogBasis, derlog
from logdiv.weyl import WeylOp

SURFACE_VARS = ("x", "y", "z")
SURFACE_F = "y*(x^2+y)*(x^2*z+y)"

# syzygies of (f, f_x, f_y, f_z) for the surface, as published
SURFACE_SYZYGIES = [
    ("-3", "1/2*x", "y", "0"),
    ("-x^2", "0", "0", "x^2*z+y"),
    ("-x*z-x", "1/2*x^2+1/2*y", "0", "x*z^2-x*z"),
]


@pytest.fixture(scope="session")
def surface_f() -> Poly:
    return parse_poly(SURFACE_F, SURFACE_VARS)


@pytest.fixture(scope="session")
def surface_rows() -> list[list[Poly]]:
    return [[parse_poly(c, SURFACE_VARS) for c in row[1:]] for row in SURFACE_SYZYGIES]


@pytest.fixture(scope="session")
def surface_multipliers() -> list[Poly]:
    return [-parse_poly(row[0], SURFACE_VARS) for row in SURFACE_SYZYGIES]


@pytest.fixture(scope="session")
def surface_fields(surface_rows) -> list[WeylOp]:
    return [WeylOp.vector_field(row) for row in surface_rows]


@pytest.fixture(scope="session")
def surface_basis(surface_f, surface_rows) -> LogBasis:
    return LogBasis.build(surface_f, surface_rows)


@pytest.fixture(scope="session")
def surface_derlog(surface_f):
    return derlog(surface_f)


# name -> (equation text, variables)
DIVISOR_ZOO = {
    "line": ("x", ("x",)),
    "normal_crossing_2": ("x*y", ("x", "y")),
    "normal_crossing_3": ("x*y*z", ("x", "y", "z")),
    "normal_crossing_4": ("x*y*z*w", ("x", "y", "z", "w")),
    "cusp": ("x^2-y^3", ("x", "y")),
    "four_lines": ("x*y*(x+y)*(x+2*y)", ("x", "y")),
    "surface": (SURFACE_F, SURFACE_VARS),
}


@pytest.fixture(scope="session")
def zoo_bases() -> dict[str, LogBasis]:
    out = {}
    for name, (text, vars) in DIVISOR_ZOO.items():
        result = derlog(parse_poly(text, vars))
        assert result.certified, f"{name} should certify"
        out[name] = result.basis
    return out

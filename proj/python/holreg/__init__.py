"""Exact-arithmetic toolkit for CR geometry.

Dict-in/dict-out wrappers over the compiled core. All structures follow the
JSON formats of the command-line tool: rationals are strings like "-7/3",
complex scalars are {"re": ..., "im": ...}, polynomials are term lists
[{"c": coeff, "e": [exponents]}], and manifolds, bases, and maps are the
documented JSON objects.
"""

import json as _json

from . import _core

__all__ = [
    "solve_hol",
    "grade",
    "structure_constants",
    "complexify",
    "property_p",
    "check_form",
    "check_tube",
    "phi",
    "verify_intertwining",
    "extract",
    "reconstruct",
    "orbit_consistency",
    "compose",
    "apply",
]

__version__ = "0.1.0"


def _out(text):
    return _json.loads(text)


def _arg(value):
    return _json.dumps(value)


def solve_hol(manifold, degree, stabilize=False):
    """All polynomial fields tangent to the manifold up to the degree cap."""
    return _out(_core.solve_hol(_arg(manifold), degree, stabilize))


def grade(basis):
    """Euler weight decomposition of the complexified span."""
    return _out(_core.grade(_arg(basis)))


def structure_constants(basis):
    """Bracket tensor over the given basis."""
    return _out(_core.structure_constants(_arg(basis)))


def complexify(basis):
    """Canonical complex span of a real basis, with the totally-real flag."""
    return _out(_core.complexify(_arg(basis)))


def property_p(basis):
    """Constants and Euler field membership in the complex span."""
    return _out(_core.property_p(_arg(basis)))


def check_form(manifold):
    """Independence and joint-kernel test of a quadric's forms."""
    return _out(_core.check_form(_arg(manifold)))


def check_tube(manifold):
    """Affine span and tangent-constant conditions of a tube base."""
    return _out(_core.check_tube(_arg(manifold)))


def phi(basis, point):
    """Pluecker coordinates of the isotropy subalgebra at a point."""
    return _out(_core.phi(_arg(basis), _arg(point)))


def verify_intertwining(basis, map, samples=20, seed=0):
    """Sampled check that the subspace map intertwines the action of map."""
    return _out(_core.verify_intertwining(_arg(basis), _arg(map), samples, seed))


def extract(map):
    """Reduced components and denominators of a map in (p, q) form."""
    return _out(_core.extract(_arg(map)))


def reconstruct(pq, seed=0):
    """Validate external (p, q) data and return the canonical map."""
    return _out(_core.reconstruct(_arg(pq), seed))


def orbit_consistency(manifold, map, samples=20, seed=0):
    """Sampled check that the map sends the manifold into itself."""
    return _out(_core.orbit_consistency(_arg(manifold), _arg(map), samples, seed))


def compose(g1, g2):
    """Composition g1 after g2 in normal form."""
    return _out(_core.compose(_arg(g1), _arg(g2)))


def apply(map, point):
    """Evaluate the map at a regular point."""
    return _out(_core.apply(_arg(map), _arg(point)))

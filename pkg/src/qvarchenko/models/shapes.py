"""Canonical rational coordinates for the model arrangements.

Only the combinatorics matter, so irrational coordinates (regular polygons)
are replaced by close rational approximations that keep exact parallelism
where the regular figure has it.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple

from ..geometry import Arrangement, Hyperplane

_DEN = 10**6


def polygon_normals(n: int) -> List[Tuple[Fraction, Fraction]]:
    """Rational approximations of the outward edge normals of a regular n-gon.

    Edge ``k`` (0-based) faces angle ``2 pi k / n``; normals run
    counter-clockwise.  For even ``n`` opposite normals are exact negatives.
    """
    out: List[Tuple[Fraction, Fraction]] = []
    for k in range(n):
        if n % 2 == 0 and k >= n // 2:
            cx, cy = out[k - n // 2]
            out.append((-cx, -cy))
            continue
        t = 2 * math.pi * k / n
        out.append(
            (Fraction(math.cos(t)).limit_denominator(_DEN), Fraction(math.sin(t)).limit_denominator(_DEN))
        )
    return out


def polygon_arrangement(n: int) -> Arrangement:
    """Edge lines of a regular n-gon around the origin, labelled counter-clockwise."""
    return Arrangement(2, tuple(Hyperplane((cx, cy), 1) for cx, cy in polygon_normals(n)))


def prism_arrangement(n: int) -> Arrangement:
    """The n-gon prism walls plus the plane ``z = 0`` as the last hyperplane."""
    walls = [Hyperplane((cx, cy, 0), 1) for cx, cy in polygon_normals(n)]
    return Arrangement(3, tuple(walls) + (Hyperplane((0, 0, 1), 0),))


def tetrahedron_arrangement() -> Arrangement:
    corners = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return Arrangement(3, tuple(Hyperplane(c, 1) for c in corners))


def cube_arrangement() -> Arrangement:
    """Faces x, y, z = 1 then x, y, z = -1, so ``h_i`` and ``h_{i+3}`` are opposite."""
    faces = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    return Arrangement(3, tuple(Hyperplane(f, 1) for f in faces))


# cube corners in the order 123 234 345 456 561 612 135 246
CUBE_CORNERS = [(1, 1, 1), (-1, 1, 1), (-1, -1, 1), (-1, -1, -1), (1, -1, -1), (1, 1, -1), (1, -1, 1), (-1, 1, -1)]


def octahedron_arrangement() -> Arrangement:
    """Face ``h_k`` is the face normal to the ``k``-th cube corner."""
    return Arrangement(3, tuple(Hyperplane(c, 1) for c in CUBE_CORNERS))


def pyramid_arrangement(n: int) -> Arrangement:
    """Side planes through apex ``(0, 0, 1)`` and the n-gon base edges, then the base ``z = 0``.

    The base polygon has the rational normals of :func:`polygon_normals`
    with offset 1, so each side plane is ``c . (x, y) + z = 1``.
    """
    sides = [Hyperplane((cx, cy, 1), 1) for cx, cy in polygon_normals(n)]
    return Arrangement(3, tuple(sides) + (Hyperplane((0, 0, 1), 0),))


CENTRE_2D = (0, 0)
CENTRE_3D = (0, 0, 0)
ABOVE_BASE = (0, 0, Fraction(1, 2))

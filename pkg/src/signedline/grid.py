"""Moving valid drawings onto rational and integer grids.

Validity only compares distances with strict inequalities, so the set of
valid drawings is open: a float drawing that approximates an exactly valid
one can be snapped to nearby rationals, and any exact rational drawing can
be scaled and shifted onto nonnegative integer coordinates.  Both moves
preserve validity; the second one exactly, by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .core import Drawing, SignedGraph, check_valid


def rationalize(
    g: SignedGraph, d: Drawing, depth: int = 20, max_depth: int = 64
) -> Optional[Drawing]:
    """Snap a float-valid drawing to exact dyadic rationals.

    Each coordinate is rounded to the nearest multiple of 2**-depth and the
    result re-checked exactly; on failure the grid is refined one power of
    two at a time up to `max_depth`.  Returns None when even the finest
    grid fails, which happens exactly when the input sits on (or across) a
    validity boundary rather than safely inside the open set.
    """
    report = check_valid(g, d)
    if not report.valid:
        raise ValueError("drawing is not valid in its given coordinates")

    for k in range(depth, max_depth + 1):
        scale = 1 << k
        points = tuple(
            tuple(Fraction(round(c * scale), scale) for c in p) for p in d.points
        )
        candidate = Drawing(d.dim, points)
        if check_valid(g, candidate).valid:
            return candidate
    return None


def integerize(g: SignedGraph, d: Drawing) -> Drawing:
    """Rescale an exactly valid drawing onto nonnegative integers.

    Multiplying every coordinate by the least common multiple of the
    denominators clears fractions, and translating by the componentwise
    minimum makes everything nonnegative; both transformations multiply or
    shift each compared distance alike, so validity carries over.
    """
    if not d.is_exact:
        raise ValueError("integerize needs exact rational coordinates")
    if not check_valid(g, d).valid:
        raise ValueError("drawing is not valid")

    coords = [Fraction(c) for p in d.points for c in p]
    lcm = 1
    for c in coords:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    scaled = [[c * lcm for c in p] for p in d.points]
    if scaled:
        for axis in range(d.dim):
            low = min(p[axis] for p in scaled)
            for p in scaled:
                p[axis] -= low
    points = tuple(tuple(int(c) for c in p) for p in scaled)
    return Drawing(d.dim, points)

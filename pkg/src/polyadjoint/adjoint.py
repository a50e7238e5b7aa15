"""Adjoint polynomials of polytopes.

Provides the universal adjoint (vertex/cone sum over the normal fan), its
specialization to the adjoint polynomial alpha_P, the explicit edge-form
formula for polygons, Warren's triangulation formula in the plane, and exact
vanishing checks on flats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .polyring import Poly, VarRegistry, equal_up_to_scalar
from .polytope import HPolytope, inward_edge_forms, order_ccw


def facet_registry(k, prefix="x"):
    return VarRegistry([f"{prefix}{i}" for i in range(k)])


def affine_registry(n):
    """Chart coordinates x1..xn (x0 is reserved for homogenization)."""
    return VarRegistry([f"x{i}" for i in range(1, n + 1)])


def homogeneous_registry(n):
    return VarRegistry([f"x{i}" for i in range(n + 1)])


def _det_fraction(rows):
    """Exact determinant of a small square Fraction matrix."""
    d = len(rows)
    if d == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(d):
        if rows[0][j] == 0:
            continue
        minor = [[row[m] for m in range(d) if m != j] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * _det_fraction(minor)
    return total


@dataclass
class UniversalAdjoint:
    poly: Poly
    registry: VarRegistry  # one variable per facet, in facet order


@dataclass
class AdjointResult:
    affine: Poly  # in y1..yn
    homogeneous: Poly  # in x0..xn
    degree: int


def universal_adjoint(polytope, registry=None):
    """Adj_P(x) = sum over vertices of |det U_sigma| * prod of the other
    facet variables.  Requires a simple polytope."""
    k = len(polytope.facets)
    n = polytope.dim
    if registry is None:
        registry = facet_registry(k)
    if len(registry) != k:
        raise ValueError("registry size must match the facet count")
    vrep, inc = polytope.enumerate_vertices()
    total = registry.zero()
    for v, facets in zip(vrep, inc):
        if len(facets) != n:
            raise ValueError(f"non-simple vertex {v} (incident to {len(facets)} facets)")
        normals = [list(polytope.facets[i].normal) for i in sorted(facets)]
        weight = abs(_det_fraction(normals))
        exps = [0] * k
        for i in range(k):
            if i not in facets:
                exps[i] = 1
        total = total + Poly(registry, {tuple(exps): weight})
    return UniversalAdjoint(total, registry)


def adjoint(polytope):
    """alpha_P via facet-form substitution into the universal adjoint.

    Returns the canonical-scalar-normalized adjoint; asserts the guaranteed
    degree drop from k-n to k-n-1 at runtime.
    """
    simple, witness = polytope.is_simple_arrangement()
    if not simple:
        raise ValueError(
            f"adjoint requires a simple facet arrangement; violating subset {witness}"
        )
    k = len(polytope.facets)
    n = polytope.dim
    ua = universal_adjoint(polytope)
    areg = affine_registry(n)
    assignment = {}
    for i, f in enumerate(polytope.facets):
        assignment[f"x{i}"] = areg.linear_form(f.normal, f.offset)
    affine = ua.poly.substitute(assignment)
    target_degree = k - n - 1
    if affine.degree() > target_degree:
        raise AssertionError(
            "degree drop violated: specialization of the universal adjoint "
            f"has degree {affine.degree()}, expected <= {target_degree}"
        )
    affine = affine.canonical()
    homogeneous = _homogenize_affine(affine, n, target_degree)
    return AdjointResult(affine, homogeneous, target_degree)


def _homogenize_affine(affine, n, degree):
    return affine.homogenize(homogeneous_registry(n), "x0", degree)


def polygon_adjoint(polygon):
    """Edge-form formula for polygon adjoints:
    alpha_P = sum_i det(w_i, w_{i+1}) prod_{j not in {i,i+1}} l_j
    with primitive inward forms for counterclockwise-ordered vertices.

    Accepts an HPolytope (dim 2) or an explicitly ordered ccw vertex list;
    an explicitly given order must be convex counterclockwise.
    """
    if isinstance(polygon, HPolytope):
        cycle = polygon.polygon_ccw()
    else:
        cycle = [tuple(Fraction(x) for x in v) for v in polygon]
        _require_ccw_convex(cycle)
    n = len(cycle)
    forms = inward_edge_forms(cycle)
    areg = affine_registry(2)
    lins = [areg.linear_form(w, c) for w, c in forms]
    total = areg.zero()
    for i in range(n):
        wi = forms[i][0]
        wj = forms[(i + 1) % n][0]
        weight = Fraction(wi[0] * wj[1] - wi[1] * wj[0])
        prod = areg.constant(weight)
        for j in range(n):
            if j != i and j != (i + 1) % n:
                prod = prod * lins[j]
        total = total + prod
    degree = n - 3
    if total.degree() > degree:
        raise AssertionError("polygon adjoint exceeds expected degree")
    homogeneous = _homogenize_affine(total, 2, degree)
    return AdjointResult(total, homogeneous, degree)


def _require_ccw_convex(cycle):
    n = len(cycle)
    for i in range(n):
        a, b, c = cycle[i - 1], cycle[i], cycle[(i + 1) % n]
        cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        if cross <= 0:
            raise ValueError("vertices are not in convex counterclockwise position")


# -- Warren's formula in the plane -------------------------------------------


def triangulation_fan(n, apex=0):
    """Fan triangulation of an n-gon from one apex (vertex indices)."""
    return [(apex, (apex + i) % n, (apex + i + 1) % n) for i in range(1, n - 1)]


def triangulation_balanced(n):
    """Divide-and-conquer triangulation, structurally different from a fan."""

    def rec(indices):
        if len(indices) == 3:
            return [tuple(indices)]
        mid = len(indices) // 2
        left = indices[: mid + 1]
        right = indices[mid:] + [indices[0]]
        return rec(left) + rec(right)

    return rec(list(range(n)))


def _triangle_area(a, b, c):
    return abs(
        (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    ) / 2


def validate_triangulation(cycle, triangles):
    n = len(cycle)
    if len(triangles) != n - 2:
        raise ValueError("a triangulation of an n-gon has n-2 triangles")
    total = Fraction(0)
    for tri in triangles:
        if len(set(tri)) != 3 or any(not (0 <= i < n) for i in tri):
            raise ValueError(f"bad triangle {tri}")
        area = _triangle_area(*(cycle[i] for i in tri))
        if area == 0:
            raise ValueError(f"degenerate triangle {tri}")
        total += area
    polygon_area = sum(
        _triangle_area(cycle[0], cycle[i], cycle[i + 1]) for i in range(1, n - 1)
    )
    if total != polygon_area:
        raise ValueError("triangle areas do not add up to the polygon area")


def warren_adjoint_2d(polygon, triangles=None):
    """Warren's adjoint of a polygon in the plane, homogenized in t0.

    adj_P(t) = sum over triangles sigma of vol(sigma) * prod over vertices v
    outside sigma of (1 - <v, t>); the constant 1 becomes t0.
    """
    if isinstance(polygon, HPolytope):
        cycle = polygon.polygon_ccw()
    else:
        cycle = [tuple(Fraction(x) for x in v) for v in polygon]
    n = len(cycle)
    if triangles is None:
        triangles = triangulation_fan(n)
    validate_triangulation(cycle, triangles)
    treg = VarRegistry(["t0", "t1", "t2"])
    t0, t1, t2 = treg.variables()
    ells = [t0 - v[0] * t1 - v[1] * t2 for v in cycle]
    total = treg.zero()
    for tri in triangles:
        term = treg.constant(_triangle_area(*(cycle[i] for i in tri)))
        for i in range(n):
            if i not in tri:
                term = term * ells[i]
        total = total + term
    return total


def polar_dual_vertices(polytope):
    """Vertices of the polar dual of a polytope whose interior contains the
    origin (one per facet: -u/z for the facet <u,y> + z >= 0)."""
    duals = []
    for f in polytope.facets:
        if f.offset <= 0:
            raise ValueError("polar dual needs the origin in the interior")
        duals.append(tuple(-u / f.offset for u in f.normal))
    return duals


# -- vanishing on flats -------------------------------------------------------


def vanishes_on_flat(f, flat):
    """Exact check that a homogeneous form vanishes identically on a flat.

    Substitutes a rational parameterization x = sum_i s_i * b_i built from
    the flat's spanning basis and tests for the zero polynomial.
    """
    if not f.is_homogeneous():
        raise ValueError("vanishes_on_flat requires a homogeneous form")
    basis = flat.basis if hasattr(flat, "basis") else flat
    r = len(basis)
    if r == 0:
        raise ValueError("flat has empty basis")
    if any(len(b) != len(f.registry) for b in basis):
        raise ValueError("flat basis dimension does not match the form")
    sreg = VarRegistry([f"s{i}" for i in range(r)])
    svars = sreg.variables()
    assignment = {}
    for j, name in enumerate(f.registry.names):
        expr = sreg.zero()
        for i in range(r):
            expr = expr + svars[i] * Fraction(basis[i][j])
        assignment[name] = expr
    return f.substitute(assignment).is_zero()

"""Symmetric tridiagonal determinantal representations of polygon adjoints.

The construction follows the recursive identity
    lambda * alpha_Q * alpha_{m-1} - mu * l_{m-1}^2 * alpha_{m-2} = alpha_m
where alpha_m is the adjoint of the leading subpolygon conv(v1..vm), Q is the
quadrilateral conv(v1, v_{m-2}, v_{m-1}, v_m) and l_{m-1} is the inward form
of the edge between v_{m-2} and v_{m-1}.  Each step appends one row/column to
the previous representation; the resulting matrix is symmetric tridiagonal
with diagonal entries proportional to subquadrilateral adjoints and
off-diagonal entries proportional to edge forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .adjoint import homogeneous_registry, polygon_adjoint
from .polyring import Poly, PolyMatrix, equal_up_to_scalar, gradient_at
from .polytope import (
    HPolytope,
    inward_edge_forms,
    order_ccw,
    primitive_form,
)


@dataclass
class TridiagonalRep:
    matrix: PolyMatrix
    scalars: list  # per-step (lambda, mu) pairs, one for each appended row
    subquad_adjoints: list  # affine adjoints alpha_{Q_i} of the diagonal quads
    adjoint: Poly  # affine polygon adjoint (edge-form formula normalization)
    det_scalar: Fraction  # det(matrix) = det_scalar * adjoint


def _cycle(polygon):
    if isinstance(polygon, HPolytope):
        return polygon.polygon_ccw()
    return [tuple(Fraction(x) for x in v) for v in polygon]


def _match_two_scalars(a, b, target):
    """Solve lam*a + mu*b = target exactly by coefficient matching."""
    monomials = sorted(set(a.terms) | set(b.terms) | set(target.terms))
    rows = [[a.coefficient(e), b.coefficient(e)] for e in monomials]
    rhs = [target.coefficient(e) for e in monomials]
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    lam, mu = sol
    if (a * lam + b * mu) != target:
        return None
    return lam, mu


def build_tridiagonal(polygon):
    """Recursive tridiagonal representation of a polygon adjoint (n >= 4)."""
    cycle = _cycle(polygon)
    n = len(cycle)
    if n < 4:
        raise ValueError("tridiagonal construction needs at least 4 vertices")
    alphas = {m: polygon_adjoint(cycle[:m]).affine for m in range(3, n + 1)}
    registry = alphas[n].registry

    subquads = []
    matrix = [[alphas[4]]]
    gammas = {3: 1 / alphas[3].constant_value(), 4: Fraction(1)}
    subquads.append(alphas[4])
    scalars = []
    for m in range(5, n + 1):
        quad = order_ccw([cycle[0], cycle[m - 3], cycle[m - 2], cycle[m - 1]])
        alpha_q = polygon_adjoint(quad).affine
        a, b = cycle[m - 3], cycle[m - 2]
        w, c = primitive_form((-(b[1] - a[1]), b[0] - a[0]),
                              -(-(b[1] - a[1]) * a[0] + (b[0] - a[0]) * a[1]))
        ell = registry.linear_form(w, c)  # edge form l_{m-1}
        sol = _match_two_scalars(
            alpha_q * alphas[m - 1], -(ell * ell) * alphas[m - 2], alphas[m]
        )
        if sol is None:
            raise ValueError(
                "no scalar solution for the adjoint recursion "
                "(degenerate polygon, e.g. collinear vertices)"
            )
        lam, mu = sol
        if lam == 0 or mu == 0:
            raise ValueError("degenerate recursion scalars")
        size = len(matrix)
        zero = registry.zero()
        for row in matrix:
            row.append(zero)
        corner = alpha_q * (lam * gammas[m - 2] / (mu * gammas[m - 1]))
        new_row = [zero] * (size - 1) + [ell, corner]
        matrix[size - 1][size] = ell
        matrix.append(new_row)
        gammas[m] = gammas[m - 2] / mu
        scalars.append((lam, mu))
        subquads.append(alpha_q)

    rep = PolyMatrix(matrix)
    det_scalar = gammas[n]
    det = rep.det()
    if det != alphas[n] * det_scalar:
        raise AssertionError("tridiagonal construction lost the determinant")
    return TridiagonalRep(rep, scalars, subquads, alphas[n], det_scalar)


def verify_detrep(matrix, f):
    """Scalar c with det(matrix) = c * f (entries degree <= 1), else None."""
    if not matrix.has_linear_entries():
        raise ValueError("determinantal representations need degree <= 1 entries")
    if matrix.size != f.degree():
        raise ValueError(
            f"matrix size {matrix.size} does not match deg f = {f.degree()}"
        )
    return equal_up_to_scalar(matrix.det(), f)


def definiteness_certificate(matrix, point):
    """Exact pointwise definiteness of a symmetric matrix of linear forms.

    Evaluates at the rational point and checks that all leading principal
    minors are positive, after globally negating when the (1,1) entry is
    negative.  A zero leading minor reports indefinite (boundary case).
    """
    if not matrix.is_symmetric():
        raise ValueError("definiteness requires a symmetric matrix")
    vals = matrix.evaluate(point)
    if vals[0][0] < 0:
        vals = [[-x for x in row] for row in vals]
    for k in range(1, matrix.size + 1):
        minor = _numeric_det([row[:k] for row in vals[:k]])
        if minor <= 0:
            return False
    return True


def _numeric_det(rows):
    d = len(rows)
    a = [row[:] for row in rows]
    det = Fraction(1)
    for k in range(d):
        pivot = next((i for i in range(k, d) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, d):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def _homogeneous_forms(cycle):
    """Homogeneous edge forms (coeff vectors in x0,x1,x2), e_m -> index m-1."""
    return [(c,) + tuple(w) for w, c in inward_edge_forms(cycle)]


def residual_point_pairs(cycle):
    """Edge index pairs (1-based) of non-adjacent edges."""
    n = len(cycle)
    pairs = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if j - i == 1 or (i == 1 and j == n):
            continue
        pairs.append((i, j))
    return pairs


def _line_intersection(f, g):
    """Projective intersection point of two distinct lines in P^2."""
    kern = linalg.nullspace([list(f), list(g)])
    if len(kern) != 1:
        raise ValueError("forms do not define two distinct lines")
    return tuple(kern[0])


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def tangency_certificate(polygon, i, j):
    """Verify that the subquadrilateral adjoint line is tangent to the
    adjoint curve at the residual point q = L_i cap L_j (1-based edges)."""
    cycle = _cycle(polygon)
    n = len(cycle)
    if (i, j) not in residual_point_pairs(cycle) and (j, i) not in residual_point_pairs(cycle):
        raise ValueError(f"edges {i}, {j} do not give a residual point")
    forms = _homogeneous_forms(cycle)
    q = _line_intersection(forms[i - 1], forms[j - 1])
    alpha = polygon_adjoint(cycle).homogeneous
    quad = order_ccw(
        [cycle[(i - 2) % n], cycle[(i - 1) % n], cycle[(j - 2) % n], cycle[(j - 1) % n]]
    )
    alpha_q = polygon_adjoint(quad).homogeneous  # a linear form in x0,x1,x2
    if alpha.evaluate(q) != 0 or alpha_q.evaluate(q) != 0:
        return False
    grad = gradient_at(alpha, q)
    if all(g == 0 for g in grad):
        raise ValueError("adjoint is singular at the residual point")
    hreg = homogeneous_registry(2)
    coeffs = [alpha_q.coefficient(tuple(1 if m == t else 0 for m in range(3)))
              for t in range(3)]
    return _cross3(grad, coeffs) == (0, 0, 0)


def contact_certificate(polygon):
    """Check the even-contact structure between the adjoints of P and of
    P minus its last vertex, over R(P) away from L_1 and L_n.

    Returns a report dict with the contact point count and verification flag.
    """
    cycle = _cycle(polygon)
    n = len(cycle)
    if n < 5:
        raise ValueError("contact structure needs at least 5 vertices")
    alpha = polygon_adjoint(cycle).homogeneous
    reduced = cycle[:-1]
    alpha_prime = polygon_adjoint(reduced).homogeneous
    forms = _homogeneous_forms(cycle)
    points = []
    for i, j in residual_point_pairs(cycle):
        if 1 in (i, j) or n in (i, j):
            continue
        points.append(_line_intersection(forms[i - 1], forms[j - 1]))
    ok = True
    for q in points:
        if alpha.evaluate(q) != 0 or alpha_prime.evaluate(q) != 0:
            ok = False
            break
        g1 = gradient_at(alpha, q)
        g2 = gradient_at(alpha_prime, q)
        if all(x == 0 for x in g1):
            continue  # singular adjoint: tangency check void at this point
        if _cross3(g1, g2) != (0, 0, 0):
            ok = False
            break
    expected = (n - 3) * (n - 4) // 2
    return {
        "contact_points": len(points),
        "expected": expected,
        "count_matches": len(points) == expected,
        "all_tangential": ok,
    }

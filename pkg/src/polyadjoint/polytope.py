"""Projective polytopes from facet inequalities.

A polytope lives in a fixed affine chart of P^n and is described by
inequalities <u, y> + z >= 0 with rational data.  All incidence and rank
computations are done exactly; arrangement-level questions (simplicity,
residual flats) use homogeneous coordinates (z, u) so that behaviour at
infinity is handled uniformly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg
from .polyring import VarRegistry, format_fraction


def _frac_vec(v):
    return tuple(Fraction(x) for x in v)


class Facet:
    __slots__ = ("normal", "offset")

    def __init__(self, normal, offset):
        self.normal = _frac_vec(normal)
        self.offset = Fraction(offset)

    def value_at(self, point):
        return sum(a * b for a, b in zip(self.normal, point)) + self.offset

    def homogeneous(self):
        """Coefficient vector (z, u_1, ..., u_n) of the form in (x0,...,xn)."""
        return (self.offset,) + self.normal

    def to_json(self):
        return {
            "normal": [format_fraction(x) for x in self.normal],
            "offset": format_fraction(self.offset),
        }


class Flat:
    """Projective linear subspace cut out by a set of facet hyperplanes."""

    __slots__ = ("facet_set", "codim", "basis")

    def __init__(self, facet_set, codim, basis):
        self.facet_set = tuple(sorted(facet_set))
        self.codim = codim
        self.basis = [tuple(Fraction(x) for x in b) for b in basis]

    def __repr__(self):
        return f"Flat(facets={self.facet_set}, codim={self.codim})"


class ResidualArrangement:
    """Flats of the facet hyperplane arrangement containing no face."""

    def __init__(self, flats):
        self.flats = list(flats)

    def by_codim(self, codim):
        return [f for f in self.flats if f.codim == codim]

    def lines(self, ambient_dim):
        """Flats of projective dimension one."""
        return self.by_codim(ambient_dim - 1)

    def points(self, ambient_dim):
        return self.by_codim(ambient_dim)

    def planes(self, ambient_dim):
        """Flats of projective dimension two."""
        return self.by_codim(ambient_dim - 2)


class HPolytope:
    """Bounded full-dimensional polytope {y : <u_i, y> + z_i >= 0}."""

    def __init__(self, dim, facets, name=None, validate=True):
        self.dim = dim
        self.facets = [
            f if isinstance(f, Facet) else Facet(f[0], f[1]) for f in facets
        ]
        for f in self.facets:
            if len(f.normal) != dim:
                raise ValueError("facet normal dimension mismatch")
            if all(x == 0 for x in f.normal):
                raise ValueError("zero facet normal")
        self.name = name
        self._vrep = None
        self._incidence = None
        if validate:
            self._validate()

    # -- construction checks ----------------------------------------------

    def _validate(self):
        normals = [list(f.normal) for f in self.facets]
        if linalg.rank(normals) < self.dim:
            raise ValueError("unbounded polytope: facet normals do not span")
        ray = self._recession_ray()
        if ray is not None:
            raise ValueError(f"unbounded polytope: recession direction {ray}")
        vrep, inc = self.enumerate_vertices()
        if not vrep:
            raise ValueError("empty polytope")
        centroid = self.interior_point()
        for i, f in enumerate(self.facets):
            if f.value_at(centroid) <= 0:
                raise ValueError(
                    f"polytope not full-dimensional (facet {i} not strict at centroid)"
                )
        # every facet must support an (n-1)-face: its tight vertices must
        # affinely span a hyperplane
        for i in range(len(self.facets)):
            tight = [vrep[j] for j, s in enumerate(inc) if i in s]
            stacked = [[Fraction(1)] + list(v) for v in tight]
            if not stacked or linalg.rank(stacked) < self.dim:
                raise ValueError(f"redundant facet inequality {i}")

    def _recession_ray(self):
        """A non-zero direction d with <u_i, d> >= 0 for all i, if any."""
        normals = [list(f.normal) for f in self.facets]
        for subset in itertools.combinations(range(len(normals)), self.dim - 1):
            rows = [normals[i] for i in subset]
            kern = linalg.nullspace(rows) if rows else []
            if self.dim == 1:
                kern = [[Fraction(1)]]
            for d in kern:
                for cand in (d, [-x for x in d]):
                    if any(x != 0 for x in cand) and all(
                        sum(a * b for a, b in zip(n, cand)) >= 0 for n in normals
                    ):
                        return tuple(cand)
        return None

    # -- vertex enumeration -------------------------------------------------

    def enumerate_vertices(self):
        """Exact brute-force vertex enumeration over dim-subsets of facets.

        Returns (vertices, incidence) where incidence[i] is the frozenset of
        all facet indices met with equality at vertices[i].
        """
        if self._vrep is not None:
            return self._vrep, self._incidence
        k = len(self.facets)
        seen = {}
        for subset in itertools.combinations(range(k), self.dim):
            rows = [list(self.facets[i].normal) for i in subset]
            rhs = [-self.facets[i].offset for i in subset]
            if linalg.rank(rows) < self.dim:
                continue
            point = linalg.solve(rows, rhs)
            if point is None:
                continue
            point = tuple(point)
            if point in seen:
                continue
            values = [f.value_at(point) for f in self.facets]
            if any(v < 0 for v in values):
                continue
            seen[point] = frozenset(i for i, v in enumerate(values) if v == 0)
        vertices = sorted(seen)
        self._vrep = vertices
        self._incidence = [seen[v] for v in vertices]
        return self._vrep, self._incidence

    def is_simple(self):
        """Every vertex incident to exactly dim facets."""
        _, inc = self.enumerate_vertices()
        return all(len(s) == self.dim for s in inc)

    def interior_point(self):
        """Vertex centroid; strictly feasible for full-dimensional input."""
        vrep, _ = self.enumerate_vertices()
        n = len(vrep)
        return tuple(
            sum(v[i] for v in vrep) / n for i in range(self.dim)
        )

    # -- arrangement-level structure ----------------------------------------

    def homogeneous_forms(self):
        return [list(f.homogeneous()) for f in self.facets]

    def is_simple_arrangement(self):
        """Check the projective simplicity of the facet hyperplane arrangement.

        Returns (True, None) or (False, witness_subset).
        """
        forms = self.homogeneous_forms()
        k = len(forms)
        n = self.dim
        for i in range(2, min(k, n + 1) + 1):
            for subset in itertools.combinations(range(k), i):
                if linalg.rank([forms[j] for j in subset]) < i:
                    return False, subset
        return True, None

    def residual_arrangement(self):
        """All intersections of facet hyperplanes containing no face.

        Requires a simple arrangement; under simplicity a flat contains a
        face iff some vertex is incident to all its defining facets.
        """
        simple, witness = self.is_simple_arrangement()
        if not simple:
            raise ValueError(
                f"residual arrangement requires a simple arrangement; "
                f"violating facet subset {witness}"
            )
        _, inc = self.enumerate_vertices()
        forms = self.homogeneous_forms()
        k = len(self.facets)
        flats = []
        for size in range(2, self.dim + 1):
            for subset in itertools.combinations(range(k), size):
                s = set(subset)
                if any(s <= v for v in inc):
                    continue
                basis = linalg.nullspace([forms[j] for j in subset])
                flats.append(Flat(subset, size, basis))
        return ResidualArrangement(flats)

    # -- polygon helpers -----------------------------------------------------

    def polygon_ccw(self):
        """Counterclockwise vertex cycle starting at the lexicographic
        minimum (polygons only)."""
        if self.dim != 2:
            raise ValueError("polygon_ccw requires a polygon")
        vrep, _ = self.enumerate_vertices()
        return order_ccw(vrep)

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        data = {
            "dim": self.dim,
            "facets": [f.to_json() for f in self.facets],
        }
        if self.name:
            data["name"] = self.name
        return data

    @staticmethod
    def from_json(data, validate=True):
        facets = [(f["normal"], f["offset"]) for f in data["facets"]]
        return HPolytope(data["dim"], facets, name=data.get("name"), validate=validate)


def order_ccw(points):
    """Order planar points counterclockwise around their centroid, starting
    from the lexicographically smallest."""
    points = [_frac_vec(p) for p in points]
    n = len(points)
    cx = sum(p[0] for p in points) / n
    cy = sum(p[1] for p in points) / n

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp_key(p):
        return (half(p), p)

    # sort by angle via cross-product comparisons within half-planes
    import functools

    def compare(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        px, py = p[0] - cx, p[1] - cy
        qx, qy = q[0] - cx, q[1] - cy
        cross = px * qy - py * qx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    ordered = sorted(points, key=functools.cmp_to_key(compare))
    start = ordered.index(min(points))
    return ordered[start:] + ordered[:start]


def polygon_from_vertices(vertices, name=None):
    """HPolytope of a convex polygon given its vertices (any order)."""
    cycle = order_ccw(vertices)
    facets = []
    for i in range(len(cycle)):
        a, b = cycle[i - 1], cycle[i]
        dx, dy = b[0] - a[0], b[1] - a[1]
        w = (-dy, dx)  # inward for counterclockwise orientation
        c = -(w[0] * a[0] + w[1] * a[1])
        facets.append(primitive_form(w, c))
    return HPolytope(2, facets, name=name)


def primitive_form(normal, offset):
    """Scale a rational inequality to coprime integer coefficients."""
    from math import gcd, lcm

    vals = list(normal) + [offset]
    vals = [Fraction(v) for v in vals]
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    ints = [v.numerator * (den // v.denominator) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def inward_edge_forms(cycle):
    """Primitive inward facet forms of a ccw vertex cycle.

    Edge i lies between cycle[i-1] and cycle[i] (so form i vanishes there),
    matching the convention that edge e_i joins v_{i-1} and v_i.
    """
    forms = []
    for i in range(len(cycle)):
        a, b = cycle[i - 1], cycle[i]
        dx, dy = b[0] - a[0], b[1] - a[1]
        w = (-dy, dx)
        c = -(w[0] * a[0] + w[1] * a[1])
        forms.append(primitive_form(w, c))
    return forms


def euler_data(polytope):
    """(vertices, edges, facets) counts of a 3-polytope from incidence."""
    if polytope.dim != 3:
        raise ValueError("euler_data requires a 3-polytope")
    vrep, inc = polytope.enumerate_vertices()
    edges = set()
    for i in range(len(vrep)):
        for j in range(i + 1, len(vrep)):
            common = inc[i] & inc[j]
            # an edge of a 3-polytope is cut out by two facets whose tight
            # vertex sets share exactly these two points
            if len(common) >= 2:
                stacked = [[Fraction(1)] + list(vrep[i]), [Fraction(1)] + list(vrep[j])]
                for pair in itertools.combinations(sorted(common), 2):
                    tight = [
                        m
                        for m, s in enumerate(inc)
                        if pair[0] in s and pair[1] in s
                    ]
                    if set(tight) == {i, j}:
                        edges.add(pair)
    return len(vrep), len(edges), len(polytope.facets)


# -- random instance generators (used by property suites and CLI sweeps) ----


def random_convex_polygon(rng, n):
    """Convex polygon with n rational vertices in convex position.

    Vertices are rational points on a circle (tangent half-angle
    parameterization), scaled and jittered to avoid degenerate luck.
    """
    while True:
        ts = sorted(rng.sample(range(-400, 400), n))
        ts = [Fraction(t, 101) for t in ts]
        pts = []
        for t in ts:
            den = 1 + t * t
            pts.append(((1 - t * t) / den * 20, 2 * t / den * 20))
        if len(set(pts)) == n:
            try:
                poly = polygon_from_vertices(pts)
            except ValueError:
                continue
            if len(poly.enumerate_vertices()[0]) == n:
                return poly


def random_simple_3polytope(rng, k, require_simple_arrangement=True):
    """Simple 3-polytope with k facets by iterated generic vertex truncation
    of a simplex."""
    while True:
        facets = [
            ((1, 0, 0), 0),
            ((0, 1, 0), 0),
            ((0, 0, 1), 0),
            ((-1, -1, -1), 12),
        ]
        p = HPolytope(3, facets, validate=False)
        ok = True
        while len(p.facets) < k:
            vrep, inc = p.enumerate_vertices()
            if not p.is_simple():
                ok = False
                break
            v = vrep[rng.randrange(len(vrep))]
            c = p.interior_point()
            d = [
                v[i] - c[i] + Fraction(rng.randrange(-100, 101), 10007)
                for i in range(3)
            ]
            dv = sum(a * b for a, b in zip(d, v))
            others = [w for w in vrep if w != v]
            m = max(sum(a * b for a, b in zip(d, w)) for w in others)
            if dv <= m:
                continue  # jittered direction no longer exposes v; retry
            frac = Fraction(rng.randrange(20, 70), 100)
            t = m + (dv - m) * frac
            new_facets = [(f.normal, f.offset) for f in p.facets]
            new_facets.append((tuple(-x for x in d), t))
            try:
                p = HPolytope(3, new_facets, validate=True)
            except ValueError:
                ok = False
                break
        if not ok or len(p.facets) != k or not p.is_simple():
            continue
        if require_simple_arrangement and not p.is_simple_arrangement()[0]:
            continue
        return p

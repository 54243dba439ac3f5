"""2-D convex geometry on the complex plane.

Polygons are tuples of complex vertices in counter-clockwise order,
rotated so the lexicographically smallest vertex (real part first, then
imaginary part) comes first.  Degenerate polygons with 0, 1 or 2 vertices
are allowed; a 2-vertex polygon is a segment, whose perimeter is twice
its length so that perimeter = integral of the support function holds
uniformly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInput, EmptyPolygon

EPS_HULL = 1e-12

TWO_PI = 2.0 * math.pi


def _is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def _cross(o: complex, a: complex, b: complex) -> float:
    """Cross product of (a - o) and (b - o)."""
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def _canonical_rotation(vertices):
    """Rotate the vertex cycle so the lexicographic minimum comes first."""
    if len(vertices) <= 1:
        return tuple(vertices)
    start = min(range(len(vertices)), key=lambda i: (vertices[i].real, vertices[i].imag))
    return tuple(vertices[start:]) + tuple(vertices[:start])


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, CCW, canonically rotated.

    Construction validates strict convexity for >= 3 vertices and applies
    the canonical rotation, so equality between polygons is testable.
    """

    vertices: tuple = ()
    eps: float = field(default=EPS_HULL, compare=False, repr=False)

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        for v in verts:
            if not _is_finite(v):
                raise ValueError(f"non-finite vertex {v!r}")
        if len(verts) >= 3:
            m = len(verts)
            for k in range(m):
                if _cross(verts[k], verts[(k + 1) % m], verts[(k + 2) % m]) <= self.eps:
                    raise ValueError("vertices are not strictly convex CCW")
        elif len(verts) == 2 and verts[0] == verts[1]:
            raise ValueError("duplicate vertices in a 2-vertex polygon")
        object.__setattr__(self, "vertices", _canonical_rotation(verts))

    def __len__(self):
        return len(self.vertices)

    @property
    def array(self) -> np.ndarray:
        arr = self.__dict__.get("_array")
        if arr is None:
            arr = np.asarray(self.vertices, dtype=complex)
            object.__setattr__(self, "_array", arr)
        return arr


@dataclass(frozen=True)
class SupportEvaluation:
    """Value of the support function and the vertex attaining it."""

    value: float
    argmax_vertex: int


def convex_hull(points, eps: float = EPS_HULL) -> ConvexPolygon:
    """Minimal CCW hull of a point cloud (monotone chain).

    Duplicate and collinear points are removed using the absolute
    cross-product tolerance `eps`.
    """
    pts = [complex(p) for p in points]
    if not pts:
        raise EmptyInput("convex_hull of an empty point list")
    for p in pts:
        if not _is_finite(p):
            raise ValueError(f"non-finite point {p!r}")
    pts = sorted(set((p.real, p.imag) for p in pts))
    pts = [complex(x, y) for x, y in pts]
    if len(pts) == 1:
        return ConvexPolygon((pts[0],))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= eps:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 0:  # fully collinear input collapses both chains
        hull = [pts[0], pts[-1]]
    return ConvexPolygon(tuple(hull), eps=eps)


def support(poly: ConvexPolygon, theta: float) -> SupportEvaluation:
    """Support function max_v Re(e^{-j theta} v), ties to the lowest index."""
    if len(poly) == 0:
        raise EmptyPolygon("support of an empty polygon")
    vals = (cmath.exp(-1j * theta) * poly.array).real
    idx = int(np.argmax(vals))
    return SupportEvaluation(float(vals[idx]), idx)


def support_values(poly: ConvexPolygon, thetas) -> np.ndarray:
    """Vectorized support values over an array of directions."""
    if len(poly) == 0:
        raise EmptyPolygon("support of an empty polygon")
    thetas = np.asarray(thetas, dtype=float)
    phases = np.exp(-1j * thetas)
    return (phases[:, None] * poly.array[None, :]).real.max(axis=1)


def width(poly: ConvexPolygon, theta: float) -> float:
    """Extent of the polygon along direction theta."""
    return support(poly, theta).value + support(poly, theta + math.pi).value


def mean_width(poly: ConvexPolygon, n_samples: int) -> float:
    """Midpoint-rule average of the width over [0, 2*pi)."""
    if len(poly) == 0:
        raise EmptyPolygon("mean_width of an empty polygon")
    if n_samples < 8:
        raise ValueError("n_samples must be >= 8")
    thetas = (np.arange(n_samples) + 0.5) * (TWO_PI / n_samples)
    w = support_values(poly, thetas) + support_values(poly, thetas + math.pi)
    return float(w.mean())


def perimeter(poly: ConvexPolygon) -> float:
    """Perimeter; twice the length for a segment, 0 for a point or empty."""
    m = len(poly)
    if m <= 1:
        return 0.0
    if m == 2:
        return 2.0 * abs(poly.vertices[1] - poly.vertices[0])
    total = 0.0
    for k in range(m):
        total += abs(poly.vertices[(k + 1) % m] - poly.vertices[k])
    return total


def _normal_arcs(poly: ConvexPolygon):
    """Arcs of the normal fan: list of (lo, hi, vertex_index).

    Vertex `vertex_index` is the support argmax for directions in
    [lo, hi], with hi - lo > 0 and the arcs covering [lo, lo + 2*pi).
    Only defined for polygons with >= 2 vertices.
    """
    verts = poly.vertices
    m = len(verts)
    if m < 2:
        raise ValueError("normal fan needs >= 2 vertices")
    if m == 2:
        psi = cmath.phase(verts[1] - verts[0]) - 0.5 * math.pi
        return [(psi, psi + math.pi, 1), (psi + math.pi, psi + TWO_PI, 0)]
    psis = []
    for k in range(m):
        d = verts[(k + 1) % m] - verts[k]
        psis.append(cmath.phase(d) - 0.5 * math.pi)
    arcs = []
    for k in range(m):
        lo = psis[k - 1]
        hi = psis[k]
        while hi <= lo:
            hi += TWO_PI
        arcs.append((lo, hi, k))
    return arcs


def normal_fan(poly: ConvexPolygon):
    """Sorted fan boundaries and argmax vertex just after each boundary.

    Returns (boundaries, after) where boundaries is an ascending array in
    [0, 2*pi) and after[i] is the argmax vertex index for directions in
    (boundaries[i], boundaries[i+1]).
    """
    arcs = _normal_arcs(poly)
    bounds = np.array([lo % TWO_PI for lo, _, _ in arcs])
    after = np.array([k for _, _, k in arcs], dtype=int)
    order = np.argsort(bounds)
    return bounds[order], after[order]


def argmax_vertex(poly: ConvexPolygon, theta: float, fan=None) -> int:
    """Support argmax vertex via the normal fan (single-vertex safe)."""
    if len(poly) == 1:
        return 0
    if fan is None:
        fan = normal_fan(poly)
    bounds, after = fan
    i = int(np.searchsorted(bounds, theta % TWO_PI, side="right")) - 1
    return int(after[i])  # i == -1 wraps to the last arc


def min_support(poly: ConvexPolygon) -> float:
    """Exact minimum of the support function over all directions.

    Each arc of the normal fan carries the sinusoid |v| cos(theta - arg v);
    candidates are the arc endpoints and the trough at arg v + pi when it
    falls inside the arc.
    """
    m = len(poly)
    if m == 0:
        raise EmptyPolygon("min_support of an empty polygon")
    if m == 1:
        return -abs(poly.vertices[0])
    best = math.inf
    for lo, hi, k in _normal_arcs(poly):
        v = poly.vertices[k]
        r = abs(v)
        if r == 0.0:
            best = min(best, 0.0)
            continue
        a = cmath.phase(v)
        for theta in (lo, hi):
            best = min(best, r * math.cos(theta - a))
        trough = a + math.pi
        # shift the trough into [lo, hi] modulo 2*pi
        t = lo + (trough - lo) % TWO_PI
        if t <= hi:
            best = min(best, -r)
    return best


def support_integral(poly: ConvexPolygon) -> float:
    """Exact integral of the support function over [0, 2*pi].

    Equals the perimeter (Cauchy's surface area formula); used as the
    closed-form reference for the quadrature-based mean width.
    """
    m = len(poly)
    if m == 0:
        raise EmptyPolygon("support_integral of an empty polygon")
    if m == 1:
        return 0.0
    total = 0.0
    for lo, hi, k in _normal_arcs(poly):
        v = poly.vertices[k]
        r = abs(v)
        if r == 0.0:
            continue
        a = cmath.phase(v)
        total += r * (math.sin(hi - a) - math.sin(lo - a))
    return total


def _bottom_index(verts) -> int:
    return min(range(len(verts)), key=lambda i: (verts[i].imag, verts[i].real))


def _edge_sequence(verts):
    """Edges (angle, vector, end_index) in CCW order from the bottom vertex.

    A 2-vertex polygon contributes the two opposite half-edges, so the
    merge below handles segments with no special casing.
    """
    m = len(verts)
    start = _bottom_index(verts)
    cycle = [(k % m, (k + 1) % m) for k in range(start, start + m)]
    if m == 2:
        cycle = [(start, 1 - start), (1 - start, start)]
    edges = []
    for i, j in cycle:
        d = verts[j] - verts[i]
        ang = cmath.phase(d) % TWO_PI
        edges.append((ang, d, j))
    return start, edges


def minkowski_sum_indexed(averts, bverts, eps: float = EPS_HULL):
    """Minkowski sum by the rotating edge merge, with contributor tracking.

    Inputs are CCW strictly convex vertex sequences (1, 2 or >= 3 points).
    Returns (vertices, contribs) where contribs[k] = (i, j) identifies the
    summand vertices with vertices[k] == averts[i] + bverts[j].
    """
    averts = [complex(v) for v in averts]
    bverts = [complex(v) for v in bverts]
    if not averts or not bverts:
        raise EmptyPolygon("minkowski sum with an empty polygon")
    if len(averts) == 1:
        pts = [averts[0] + v for v in bverts]
        contribs = [(0, j) for j in range(len(bverts))]
    elif len(bverts) == 1:
        pts = [v + bverts[0] for v in averts]
        contribs = [(i, 0) for i in range(len(averts))]
    else:
        sa, ea = _edge_sequence(averts)
        sb, eb = _edge_sequence(bverts)
        i = j = 0
        ca, cb = sa, sb
        pts = [averts[sa] + bverts[sb]]
        contribs = [(sa, sb)]
        while i < len(ea) or j < len(eb):
            take_a = take_b = False
            if i < len(ea) and j < len(eb):
                if abs(ea[i][0] - eb[j][0]) <= 1e-12:
                    take_a = take_b = True
                elif ea[i][0] < eb[j][0]:
                    take_a = True
                else:
                    take_b = True
            elif i < len(ea):
                take_a = True
            else:
                take_b = True
            step = 0j
            if take_a:
                step += ea[i][1]
                ca = ea[i][2]
                i += 1
            if take_b:
                step += eb[j][1]
                cb = eb[j][2]
                j += 1
            pts.append(pts[-1] + step)
            contribs.append((ca, cb))
        pts.pop()  # the final step closes the cycle
        contribs.pop()
        pts, contribs = _prune_collinear(pts, contribs, eps)
    start = min(range(len(pts)), key=lambda k: (pts[k].real, pts[k].imag))
    pts = pts[start:] + pts[:start]
    contribs = contribs[start:] + contribs[:start]
    return pts, contribs


def _prune_collinear(pts, contribs, eps):
    """Drop duplicate and collinear vertices from a CCW cycle."""
    if len(pts) <= 2:
        return pts, contribs
    keep_pts, keep_contribs = [], []
    m = len(pts)
    for k in range(m):
        prev = keep_pts[-1] if keep_pts else pts[k - 1]
        nxt = pts[(k + 1) % m]
        if abs(pts[k] - prev) <= eps and keep_pts:
            continue
        if _cross(prev, pts[k], nxt) <= eps and abs(nxt - prev) > eps:
            continue
        keep_pts.append(pts[k])
        keep_contribs.append(contribs[k])
    if not keep_pts:  # everything collapsed to (numerically) one point
        keep_pts, keep_contribs = [pts[0]], [contribs[0]]
    return keep_pts, keep_contribs


def minkowski_sum(a: ConvexPolygon, b: ConvexPolygon) -> ConvexPolygon:
    """Minkowski sum of two convex polygons."""
    if len(a) == 0 or len(b) == 0:
        raise EmptyPolygon("minkowski_sum of an empty polygon")
    pts, _ = minkowski_sum_indexed(a.vertices, b.vertices)
    # re-hull to restore strict convexity after floating-point pruning
    return convex_hull(pts)


def scale_rotate(poly: ConvexPolygon, h: complex) -> ConvexPolygon:
    """Multiply every vertex by h; h = 0 collapses to the origin."""
    if h == 0:
        return ConvexPolygon((0j,)) if len(poly) else poly
    return ConvexPolygon(tuple(v * h for v in poly.vertices))


def contains(poly: ConvexPolygon, z: complex, eps: float = 1e-9) -> bool:
    """Whether z lies in the polygon (boundary included, tolerance eps)."""
    m = len(poly)
    if m == 0:
        return False
    if m == 1:
        return abs(z - poly.vertices[0]) <= eps
    if m == 2:
        a, b = poly.vertices
        d = b - a
        t = ((z - a).real * d.real + (z - a).imag * d.imag) / abs(d) ** 2
        t = min(1.0, max(0.0, t))
        return abs(z - (a + t * d)) <= eps
    for k in range(m):
        if _cross(poly.vertices[k], poly.vertices[(k + 1) % m], z) < -eps:
            return False
    return True

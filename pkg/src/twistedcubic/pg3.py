"""The projective space PG(3,q): points, planes, lines, incidence.

Points and planes are canonical 4-tuples of field codes, normalized so the
rightmost nonzero coordinate equals 1.  Enumeration order is by the integer
encoding x0 + x1*q + x2*q^2 + x3*q^3 (last coordinate most significant);
this order is part of the output contract for submatrix dumps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf import GF

Vec4 = tuple[int, int, int, int]


def theta(n: int, q: int) -> int:
    """Number of points of PG(n,q)."""
    return (q ** (n + 1) - 1) // (q - 1)


def normalize(gf: GF, v) -> Vec4:
    """Canonical scalar multiple: rightmost nonzero coordinate becomes 1."""
    v = tuple(v)
    for i in (3, 2, 1, 0):
        if v[i]:
            if v[i] == 1:
                return v
            s = gf.inv(v[i])
            return tuple(gf.mul(s, x) for x in v)
    raise ValueError("cannot normalize the zero vector")


def incident(gf: GF, point: Vec4, plane: Vec4) -> bool:
    """True iff c0*x0 + c1*x1 + c2*x2 + c3*x3 = 0."""
    acc = 0
    for x, c in zip(point, plane):
        acc = gf.add(acc, gf.mul(x, c))
    return acc == 0


def encode(q: int, v: Vec4) -> int:
    return ((v[3] * q + v[2]) * q + v[1]) * q + v[0]


def decode(q: int, code: int) -> Vec4:
    x0 = code % q
    code //= q
    x1 = code % q
    code //= q
    return (x0, x1, code % q, code // q)


@dataclass(frozen=True)
class Line:
    """A line as its q+1 canonical points, sorted by encoding."""

    points: tuple[Vec4, ...]

    @property
    def key(self) -> tuple[Vec4, Vec4]:
        return self.points[0], self.points[1]


class PG3:
    """PG(3,q) with cached point/plane enumerations and index maps."""

    def __init__(self, gf: GF):
        self.gf = gf
        self.q = gf.q
        self.n_points = theta(3, self.q)
        self.points = self._enumerate()
        self.planes = self.points  # same canonical 4-tuples, dual role
        self.point_index = {pt: i for i, pt in enumerate(self.points)}
        self.plane_index = self.point_index
        self.point_array = np.array(self.points, dtype=np.int16)
        self.plane_array = self.point_array

    def _enumerate(self) -> list[Vec4]:
        q = self.q
        pts: list[Vec4] = [(1, 0, 0, 0)]
        pts += [(a, 1, 0, 0) for a in range(q)]
        pts += [(a, b, 1, 0) for b in range(q) for a in range(q)]
        pts += [(a, b, c, 1) for c in range(q) for b in range(q) for a in range(q)]
        return pts

    def enumerate_points(self) -> list[Vec4]:
        return list(self.points)

    def enumerate_planes(self) -> list[Vec4]:
        return list(self.planes)

    # -- linear algebra helpers ------------------------------------------

    def _null_space(self, rows: list[Vec4]) -> list[list[int]]:
        """Basis of the right null space of the given row vectors."""
        gf = self.gf
        mat = [list(r) for r in rows]
        pivots: list[int] = []
        r = 0
        for col in range(4):
            pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
            if pivot is None:
                continue
            mat[r], mat[pivot] = mat[pivot], mat[r]
            inv = gf.inv(mat[r][col])
            mat[r] = [gf.mul(inv, x) for x in mat[r]]
            for i in range(len(mat)):
                if i != r and mat[i][col]:
                    f = mat[i][col]
                    mat[i] = [gf.sub(x, gf.mul(f, y)) for x, y in zip(mat[i], mat[r])]
            pivots.append(col)
            r += 1
        basis = []
        for col in range(4):
            if col in pivots:
                continue
            vec = [0, 0, 0, 0]
            vec[col] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = gf.neg(mat[i][col])
            basis.append(vec)
        return basis

    def plane_through(self, p1: Vec4, p2: Vec4, p3: Vec4) -> Vec4:
        """The unique plane through three projectively independent points."""
        basis = self._null_space([p1, p2, p3])
        if len(basis) != 1:
            raise ValueError(f"points are not independent: {p1}, {p2}, {p3}")
        return normalize(self.gf, basis[0])

    def iter_span_points(self, a: Vec4, b: Vec4):
        """Yield the q+1 canonical points of the span of two distinct points."""
        gf = self.gf
        yield normalize(gf, a)
        for c in range(self.q):
            v = tuple(gf.add(x, gf.mul(c, y)) for x, y in zip(b, a))
            yield normalize(gf, v)

    def span_points(self, a: Vec4, b: Vec4) -> list[Vec4]:
        return list(self.iter_span_points(a, b))

    def line_through(self, p1: Vec4, p2: Vec4) -> Line:
        if p1 == p2:
            raise ValueError(f"coincident points: {p1}")
        pts = self.span_points(p1, p2)
        if len(set(pts)) != self.q + 1:
            raise ValueError(f"degenerate span through {p1}, {p2}")
        q = self.q
        return Line(tuple(sorted(pts, key=lambda v: encode(q, v))))

    def planes_through_line(self, line: Line) -> list[Vec4]:
        """The q+1 planes containing the line (a pencil)."""
        basis = self._null_space(list(line.key))
        if len(basis) != 2:
            raise ValueError("not a line")
        gf = self.gf
        u, v = basis
        out = [normalize(gf, v)]
        for c in range(self.q):
            w = tuple(gf.add(x, gf.mul(c, y)) for x, y in zip(u, v))
            out.append(normalize(gf, w))
        return out

    def incidence_mask(self, planes: np.ndarray, points: np.ndarray) -> np.ndarray:
        """Boolean (len(planes), len(points)) incidence block, table-driven."""
        mt = self.gf.mul_table
        at = self.gf.add_table
        acc = mt[planes[:, 0][:, None], points[None, :, 0]]
        for d in (1, 2, 3):
            acc = at[acc, mt[planes[:, d][:, None], points[None, :, d]]]
        return acc == 0


@lru_cache(maxsize=None)
def space_for(gf: GF) -> PG3:
    return PG3(gf)

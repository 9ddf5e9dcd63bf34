"""The twisted cubic: curve points, osculating planes, tangents, chords.

Parameters run over F_q plus a distinguished infinity sentinel; infinity is
not a field element and every parameter formula special-cases it.  The chord
census assigns every point off the curve to exactly one chord (real chord,
tangent, or imaginary chord) and is validated against the closed-form chord
counts, so a census that builds at all is already a verified partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import ConsistencyError
from .gf import GF
from .pg3 import PG3, Line, Vec4, incident, normalize


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

Param = "int | _Infinity"

REAL_CHORD = 1
TANGENT = 2
IMAGINARY_CHORD = 3

CHORD_KIND_NAMES = {REAL_CHORD: "real", TANGENT: "tangent", IMAGINARY_CHORD: "imaginary"}


@dataclass
class ChordInventory:
    """All chords plus the per-point assignment (exactly one chord each)."""

    real_chords: list[Line]
    tangents: list[Line]
    imaginary_chords: list[Line]
    kind_by_point: np.ndarray  # 0 on the curve, else REAL_CHORD/TANGENT/IMAGINARY_CHORD
    chord_id_by_point: np.ndarray  # index into the kind's chord list

    def chord_of(self, kind: int, chord_id: int) -> Line:
        lists = {REAL_CHORD: self.real_chords, TANGENT: self.tangents,
                 IMAGINARY_CHORD: self.imaginary_chords}
        return lists[kind][chord_id]


class TwistedCubic:
    """The q+1 curve points (t^3, t^2, t, 1) plus (1,0,0,0) at infinity."""

    def __init__(self, space: PG3):
        self.space = space
        self.gf = space.gf
        self.q = space.q
        self.params = list(range(self.q)) + [INFINITY]
        self.points = [self.point_at(t) for t in self.params]
        self.param_of = dict(zip(self.points, self.params))
        self.point_set = set(self.points)
        self.point_array = np.array(self.points, dtype=np.int16)
        self.osc_planes = [self.osculating_plane(t) for t in self.params]
        self.osc_plane_set = set(self.osc_planes)
        self.osc_array = np.array(self.osc_planes, dtype=np.int16)
        self.tangent_lines = [self.tangent_line(t) for t in self.params]
        self._chords: ChordInventory | None = None

    def point_at(self, t) -> Vec4:
        if t is INFINITY:
            return (1, 0, 0, 0)
        gf = self.gf
        t2 = gf.mul(t, t)
        return (gf.mul(t2, t), t2, t, 1)

    def plane_through_params(self, t1, t2, t3) -> Vec4:
        """Closed-form plane through three distinct curve parameters."""
        if t1 == t2 or t1 == t3 or t2 == t3:
            raise ValueError(f"parameters must be distinct: {t1}, {t2}, {t3}")
        gf = self.gf
        finite = [t for t in (t1, t2, t3) if t is not INFINITY]
        if len(finite) == 3:
            a, b, c = finite
            s1 = gf.add(gf.add(a, b), c)
            s2 = gf.add(gf.add(gf.mul(a, b), gf.mul(a, c)), gf.mul(b, c))
            s3 = gf.mul(gf.mul(a, b), c)
            return normalize(gf, (1, gf.neg(s1), s2, gf.neg(s3)))
        a, b = finite
        return normalize(gf, (0, gf.neg(1), gf.add(a, b), gf.neg(gf.mul(a, b))))

    def osculating_plane(self, t) -> Vec4:
        if t is INFINITY:
            return (0, 0, 0, 1)
        gf = self.gf
        three = gf.add(gf.add(1, 1), 1)
        t2 = gf.mul(t, t)
        return normalize(
            gf,
            (1, gf.neg(gf.mul(three, t)), gf.mul(three, t2), gf.neg(gf.mul(t2, t))),
        )

    def tangent_line(self, t) -> Line:
        """Tangent at P(t) via the formal derivative direction.

        The direction (3t^2, 2t, 1, 0) stays independent of P(t) in every
        characteristic (it degenerates to (0, 2t, 1, 0) in characteristic 3),
        but the construction is not taken on faith: single-point contact with
        the curve and containment in the osculating plane are asserted.
        """
        gf = self.gf
        if t is INFINITY:
            line = self.space.line_through((1, 0, 0, 0), (0, 1, 0, 0))
        else:
            two, three = gf.add(1, 1), gf.add(gf.add(1, 1), 1)
            direction = (gf.mul(three, gf.mul(t, t)), gf.mul(two, t), 1, 0)
            line = self.space.line_through(self.point_at(t), normalize(gf, direction))
        on_curve = [p for p in line.points if p in self.point_set]
        if set(on_curve) != {self.point_at(t)}:
            raise ConsistencyError(
                f"tangent construction at t={t!r} (q={self.q}) meets the curve in {on_curve}"
            )
        osc = self.osculating_plane(t)
        for p in line.points:
            if not incident(gf, p, osc):
                raise ConsistencyError(
                    f"tangent at t={t!r} (q={self.q}) leaves its osculating plane at {p}"
                )
        return line

    # -- chord census -----------------------------------------------------

    def chord_census(self) -> ChordInventory:
        if self._chords is None:
            self._chords = self._build_census()
        return self._chords

    def _build_census(self) -> ChordInventory:
        space, q = self.space, self.q
        index = space.point_index
        kind = np.zeros(space.n_points, dtype=np.int8)
        chord_id = np.full(space.n_points, -1, dtype=np.int32)

        def assign(line: Line, knd: int, cid: int):
            for p in line.points:
                if p in self.point_set:
                    continue
                i = index[p]
                if kind[i]:
                    raise ConsistencyError(
                        f"q={q}: point {p} lies on two chords "
                        f"({CHORD_KIND_NAMES[kind[i]]} #{chord_id[i]} and "
                        f"{CHORD_KIND_NAMES[knd]} #{cid})"
                    )
                kind[i] = knd
                chord_id[i] = cid

        real_chords = []
        for i in range(q + 1):
            for j in range(i + 1, q + 1):
                line = space.line_through(self.points[i], self.points[j])
                assign(line, REAL_CHORD, len(real_chords))
                real_chords.append(line)
        for cid, line in enumerate(self.tangent_lines):
            assign(line, TANGENT, cid)

        imaginary = self._group_imaginary(kind, chord_id)

        expected = (comb(q + 1, 2), q + 1, comb(q, 2))
        got = (len(real_chords), len(self.tangent_lines), len(imaginary))
        if got != expected:
            raise ConsistencyError(f"q={q}: chord counts {got} != expected {expected}")
        unassigned = [
            space.points[i]
            for i in np.flatnonzero(kind == 0)
            if space.points[i] not in self.point_set
        ]
        if unassigned:
            raise ConsistencyError(f"q={q}: {len(unassigned)} points on no chord")
        return ChordInventory(real_chords, self.tangent_lines, imaginary, kind, chord_id)

    def _group_imaginary(self, kind: np.ndarray, chord_id: np.ndarray) -> list[Line]:
        """Partition the leftover points into lines: the imaginary chords.

        For each still-unassigned point the chord through it is the unique
        line all of whose points are also unassigned; uniqueness is asserted,
        not assumed, since a second such line would falsify the one-chord
        property the census is built on.
        """
        space, q = self.space, self.q
        index = space.point_index
        points = space.points
        in_curve = self.point_set
        pool = [i for i in range(space.n_points) if kind[i] == 0 and points[i] not in in_curve]
        pool_set = set(pool)
        chords: list[Line] = []
        for leader in pool:
            if leader not in pool_set:
                continue
            candidates = {}
            lead_pt = points[leader]
            for other in pool_set:
                if other == leader:
                    continue
                member_ids = []
                for p in space.iter_span_points(lead_pt, points[other]):
                    i = index[p]
                    if i not in pool_set:
                        member_ids = None
                        break
                    member_ids.append(i)
                if member_ids is not None:
                    candidates[tuple(sorted(member_ids))] = member_ids
            if len(candidates) != 1:
                raise ConsistencyError(
                    f"q={q}: point {lead_pt} has {len(candidates)} candidate "
                    "imaginary chords instead of 1"
                )
            (member_ids,) = candidates.values()
            cid = len(chords)
            for i in member_ids:
                kind[i] = IMAGINARY_CHORD
                chord_id[i] = cid
                pool_set.discard(i)
            chords.append(Line(tuple(sorted((points[i] for i in member_ids),
                                            key=lambda v: encode(q, v)))))
        return chords

    def classify_chord_of(self, point: Vec4) -> tuple[int, Line]:
        """Chord kind and witnessing line for a point off the curve."""
        if point in self.point_set:
            raise ValueError(f"{point} lies on the curve")
        inv = self.chord_census()
        i = self.space.point_index[point]
        knd = int(inv.kind_by_point[i])
        return knd, inv.chord_of(knd, int(inv.chord_id_by_point[i]))

    def osc_count(self, point: Vec4) -> int:
        """Number of osculating planes through a point off the curve."""
        if point in self.point_set:
            raise ValueError(f"{point} lies on the curve")
        return sum(incident(self.gf, point, pl) for pl in self.osc_planes)

    def pencil_axis(self) -> Line | None:
        """Common line of the osculating planes; exists only for q = 0 mod 3."""
        if self.q % 3 != 0:
            return None
        basis = self.space._null_space([self.osc_planes[0], self.osc_planes[1]])
        if len(basis) != 2:
            raise ConsistencyError("osculating pencil basis is not 2-dimensional")
        axis_pts = self.space.span_points(
            normalize(self.gf, basis[0]), normalize(self.gf, basis[1])
        )
        line = self.space.line_through(axis_pts[0], axis_pts[1])
        for pt in line.points:
            if pt in self.point_set:
                raise ConsistencyError("pencil axis meets the curve")
            if not all(incident(self.gf, pt, pl) for pl in self.osc_planes):
                raise ConsistencyError("pencil axis point misses an osculating plane")
        return line

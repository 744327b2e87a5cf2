"""Torus sampling: grids, signature/nullity sweeps, reports.

Points are generated in deterministic lexicographic order and evaluated as
pure functions, so sweeps may run on any number of workers and still produce
identical output (records are assembled in generator order).  A coordinate
counts as 1 iff its stored rational turn is 0 - never by float comparison.

Faces are computable in two cases: one color (omega = 1 via the framed
linking matrix) and, for more colors, exactly one coordinate equal to 1 with
matching slope data.  Everything else is Skipped.
"""

from __future__ import annotations

import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from .clink import ColoredLinkData, SlopeData, hermitian_with_scale
from .errors import InvalidInput, LinksigError, MissingSeifertData
from .hermitian import DEFAULT_TAU, inertia
from .invariants import face_parts, signature_at_full_one
from .laurent import LaurentPoly, eval_at
from .strata import DEFAULT_TAU_POLY
from .torus import TorusPoint

SOURCE_INTERIOR = "Interior"
SOURCE_FACE = "Face"
SOURCE_SKIPPED = "Skipped"

FLAG_INFINITE_SLOPE = "InfiniteSlope"
FLAG_FACE_UNAVAILABLE = "FaceUnavailable"
FLAG_ERROR = "EvaluationError"


@dataclass(frozen=True)
class SampleRecord:
    point: TorusPoint
    sigma: int | None
    eta: int | None
    source: str
    certified: bool
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class ConstancyViolation:
    point_a: TorusPoint
    point_b: TorusPoint
    sigma_a: int
    sigma_b: int


@dataclass(frozen=True)
class ConcordanceReport:
    verdict: str  # "Obstructed" | "Inconclusive"
    witnesses: tuple[tuple[TorusPoint, int], ...]
    prime: int
    depth: int
    samples: int
    uncertain: int


def grid(n: int, mu: int, include_faces: bool = False) -> Iterator[TorusPoint]:
    """All points with turns k_j/n; faces (some k_j = 0) only on request."""
    if n < 2:
        raise InvalidInput("grid needs n >= 2")
    start = 0 if include_faces else 1
    for ks in product(range(start, n), repeat=mu):
        yield TorusPoint(tuple(Fraction(k, n) for k in ks))


def tbang_points(p: int, d: int, mu: int) -> Iterator[TorusPoint]:
    """All points whose coordinates are p^d-th roots of unity.

    Every such point avoids the zeros of integer polynomials taking the value
    +-1 at (1,...,1), so signatures there obstruct concordance.
    """
    if d < 1 or p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise InvalidInput("need a prime p and depth d >= 1")
    order = p**d
    for ks in product(range(order), repeat=mu):
        yield TorusPoint(tuple(Fraction(k, order) for k in ks))


def worker_count() -> int:
    raw = os.environ.get("LINKSIG_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise InvalidInput(f"LINKSIG_THREADS={raw!r} is not a positive integer") from exc
    if n < 1:
        raise InvalidInput("LINKSIG_THREADS must be >= 1")
    return n


def _evaluate_point(link: ColoredLinkData, slope_data: SlopeData | None,
                    point: TorusPoint, tau: float) -> SampleRecord:
    ones = point.unit_coordinates()
    try:
        if not ones:
            h, scale = hermitian_with_scale(link, point)
            res = inertia(h, tau, scale=scale)
            return SampleRecord(point, res.signature, res.nullity, SOURCE_INTERIOR, res.certified)
        if len(ones) == 1:
            if link.mu == 1:
                return SampleRecord(point, signature_at_full_one(link), None, SOURCE_FACE, True)
            if slope_data is not None and ones[0] == slope_data.distinguished_color:
                parts = face_parts(link, slope_data, point, tau)
                flags = () if parts.slope_value.is_finite else (FLAG_INFINITE_SLOPE,)
                return SampleRecord(point, parts.signature, None, SOURCE_FACE,
                                    parts.sublink_inertia.certified, flags)
            return SampleRecord(point, None, None, SOURCE_SKIPPED, True, (FLAG_FACE_UNAVAILABLE,))
        return SampleRecord(point, None, None, SOURCE_SKIPPED, True)
    except LinksigError as exc:
        return SampleRecord(point, None, None, SOURCE_SKIPPED, False,
                            (FLAG_ERROR, type(exc).__name__))


def sample_map(link: ColoredLinkData, points: Iterable[TorusPoint],
               slope_data: SlopeData | None = None, tau: float = DEFAULT_TAU) -> list[SampleRecord]:
    """Evaluate signature/nullity over the given points, in their order."""
    if not link.has_seifert():
        raise MissingSeifertData(f"link {link.name!r} has no Seifert data; nothing to sample")
    pts = list(points)
    workers = worker_count()
    if workers == 1 or len(pts) < 4:
        return [_evaluate_point(link, slope_data, pt, tau) for pt in pts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda pt: _evaluate_point(link, slope_data, pt, tau), pts))


def _axis_neighbors(point: TorusPoint, n: int, mu1_full_circle: bool) -> Iterator[tuple[TorusPoint, TorusPoint]]:
    # consecutive nodes along each axis; one-color sweeps wrap the circle
    for axis in range(point.mu):
        k = point.turns[axis] * n
        if k.denominator != 1:
            raise InvalidInput("constancy check expects grid points with turns k/n")
        k = int(k)
        nxt = k + 1
        if mu1_full_circle:
            nxt %= n
        elif nxt >= n:
            continue
        turns = list(point.turns)
        turns[axis] = Fraction(nxt, n)
        yield point, TorusPoint(tuple(turns))


def _midpoint(a: TorusPoint, b: TorusPoint) -> TorusPoint:
    turns = []
    for qa, qb in zip(a.turns, b.turns):
        if qa == qb:
            turns.append(qa)
        else:
            delta = (qb - qa) % 1
            if delta > Fraction(1, 2):
                delta -= 1
            turns.append((qa + delta / 2) % 1)
    return TorusPoint(tuple(turns))


def constancy_check(link: ColoredLinkData, hosokawa_poly: LaurentPoly, n: int,
                    tau: float = DEFAULT_TAU,
                    tau_poly: float = DEFAULT_TAU_POLY) -> list[ConstancyViolation]:
    """Verify the signature is constant where the Hosokawa polynomial is not zero.

    Adjacent grid samples (along axes; the full circle for one color,
    including omega = 1 through the linking-matrix value) must agree whenever
    the polynomial is safely nonzero at both nodes and at the midpoint.
    Uncertain samples are left out.  Returns the violations found.
    """
    if hosokawa_poly.mu != link.mu:
        raise InvalidInput("polynomial arity does not match the link")
    mu1 = link.mu == 1
    points = list(grid(n, link.mu, include_faces=mu1))
    records = sample_map(link, points, None, tau)
    by_point = {rec.point: rec for rec in records}
    mass = 1 + hosokawa_poly.coefficient_mass()
    cut = 10 * tau_poly * mass

    def nonzero(pt: TorusPoint) -> bool:
        return abs(eval_at(hosokawa_poly, pt)) > cut

    violations = []
    seen = set()
    for pt in points:
        for a, b in _axis_neighbors(pt, n, mu1):
            key = (a, b) if a.turns <= b.turns else (b, a)
            if key in seen:
                continue
            seen.add(key)
            ra, rb = by_point.get(a), by_point.get(b)
            if ra is None or rb is None:
                continue
            if ra.sigma is None or rb.sigma is None or not (ra.certified and rb.certified):
                continue
            if not (nonzero(a) and nonzero(b) and nonzero(_midpoint(a, b))):
                continue
            if ra.sigma != rb.sigma:
                violations.append(ConstancyViolation(a, b, ra.sigma, rb.sigma))
    return violations


def concordance_report(link: ColoredLinkData, slope_data: SlopeData | None,
                       p: int, d: int, tau: float = DEFAULT_TAU) -> ConcordanceReport:
    """Obstruction to concordance with the mirror image.

    A certified nonzero signature at a point whose coordinates are p^d-th
    roots of unity separates the link from its mirror (whose signature is the
    negative).  No witness means the test is inconclusive.
    """
    records = sample_map(link, tbang_points(p, d, link.mu), slope_data, tau)
    witnesses = []
    uncertain = 0
    for rec in records:
        if rec.source == SOURCE_SKIPPED or rec.sigma is None:
            continue
        if not rec.certified or rec.flags:
            uncertain += 1
            continue
        if rec.sigma != 0:
            witnesses.append((rec.point, rec.sigma))
    verdict = "Obstructed" if witnesses else "Inconclusive"
    return ConcordanceReport(verdict, tuple(witnesses), p, d, len(records), uncertain)


# -- output formats --------------------------------------------------------------


def records_to_csv(records: list[SampleRecord], mu: int) -> str:
    out = io.StringIO()
    out.write(",".join([f"q{i}" for i in range(1, mu + 1)] + ["sigma", "eta", "source", "certified"]))
    out.write("\n")
    for rec in records:
        sigma = "NA" if rec.sigma is None else str(rec.sigma)
        eta = "NA" if rec.eta is None else str(rec.eta)
        cert = "true" if rec.certified else "false"
        out.write(",".join(list(rec.point.turn_strings()) + [sigma, eta, rec.source, cert]))
        out.write("\n")
    return out.getvalue()


def records_to_json(records: list[SampleRecord], mu: int) -> str:
    payload = {
        "mu": mu,
        "records": [
            {
                "turns": list(rec.point.turn_strings()),
                "sigma": rec.sigma,
                "eta": rec.eta,
                "source": rec.source,
                "certified": rec.certified,
                "flags": list(rec.flags),
            }
            for rec in records
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _pixel(rec: SampleRecord) -> tuple[int, int, int]:
    if rec.source == SOURCE_SKIPPED or rec.sigma is None:
        return (0, 0, 0)
    if not rec.certified:
        return (160, 160, 160)
    s = rec.sigma
    if s == 0:
        return (255, 255, 255)
    shade = max(0, 255 - 64 * abs(s))
    return (255, shade, shade) if s > 0 else (shade, shade, 255)


def records_to_ppm(records: list[SampleRecord], width: int, height: int) -> str:
    """P3 pixmap, one pixel per record, rows in record order (k1 major)."""
    if width * height != len(records):
        raise InvalidInput(f"{len(records)} records do not fill {width}x{height}")
    lines = ["P3", f"{width} {height}", "255"]
    for r0 in range(height):
        row = records[r0 * width:(r0 + 1) * width]
        lines.append(" ".join(f"{c[0]} {c[1]} {c[2]}" for c in map(_pixel, row)))
    return "\n".join(lines) + "\n"

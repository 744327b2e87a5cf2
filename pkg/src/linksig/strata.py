"""Elementary ideals of a module presentation and the torus stratification.

A presentation matrix has n relations (rows) by m generators (columns),
n >= m.  The r-th elementary ideal is generated by the (m-r+1)-minors, with
the conventions E_r = (0) for r <= 0 and E_r = (1) for r > m.  The stratum
of a pointed-torus sample is the largest r whose ideal vanishes there; it
predicts the nullity when at most two coordinates equal 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import BasePoint, InvalidInput
from .laurent import LaurentPoly, eval_at, format_poly, gcd_many, parse_poly, unit_normalize
from .torus import TorusPoint

DEFAULT_TAU_POLY = 1e-8
_UNCERTAIN_BAND = 16.0

FLAG_MORE_THAN_TWO_ONES = "MoreThanTwoOnes"
FLAG_UNCERTAIN = "Uncertain"


class PresentationMatrix:
    """Relations-by-generators matrix over the Laurent ring."""

    def __init__(self, mu: int, entries):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise InvalidInput("presentation matrix must be nonempty")
        m = len(rows[0])
        for row in rows:
            if len(row) != m:
                raise InvalidInput("ragged presentation matrix")
            for p in row:
                if not isinstance(p, LaurentPoly) or p.mu != mu or p.half_step:
                    raise InvalidInput("entries must be integer-step polynomials of matching arity")
        if len(rows) < m:
            raise InvalidInput(f"need n >= m, got n={len(rows)} relations, m={m} generators")
        self.mu = mu
        self.entries = rows
        self.n_relations = len(rows)
        self.m_generators = m
        self._ideals: dict[int, tuple[LaurentPoly, ...]] = {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, PresentationMatrix):
            return NotImplemented
        return self.mu == other.mu and self.entries == other.entries

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...],
              cache: dict | None = None) -> LaurentPoly:
        """Exact determinant of the selected square submatrix."""
        if len(rows) != len(cols):
            raise InvalidInput("minor needs equally many rows and columns")
        if cache is None:
            cache = {}
        return self._det(tuple(rows), tuple(cols), cache)

    def _det(self, rows: tuple[int, ...], cols: tuple[int, ...], cache: dict) -> LaurentPoly:
        key = (rows, cols)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if not rows:
            out = LaurentPoly.const(1, self.mu)
        elif len(rows) == 1:
            out = self.entries[rows[0]][cols[0]]
        else:
            out = LaurentPoly.zero(self.mu)
            r0 = rows[0]
            rest = rows[1:]
            for j, c in enumerate(cols):
                entry = self.entries[r0][c]
                if entry.is_zero():
                    continue
                sub = self._det(rest, cols[:j] + cols[j + 1:], cache)
                term = entry * sub
                out = out + term if j % 2 == 0 else out - term
        cache[key] = out
        return out

    def elementary_ideal(self, r: int) -> tuple[LaurentPoly, ...]:
        """Generators of E_r; cached per presentation."""
        if r in self._ideals:
            return self._ideals[r]
        if r <= 0:
            gens: tuple[LaurentPoly, ...] = (LaurentPoly.zero(self.mu),)
        elif r > self.m_generators:
            gens = (LaurentPoly.const(1, self.mu),)
        else:
            size = self.m_generators - r + 1
            if size > min(self.n_relations, self.m_generators):
                gens = (LaurentPoly.zero(self.mu),)
            else:
                cache: dict = {}
                gens = tuple(
                    self.minor(rows, cols, cache)
                    for rows in combinations(range(self.n_relations), size)
                    for cols in combinations(range(self.m_generators), size)
                )
        self._ideals[r] = gens
        return gens


def elementary_ideal(p: PresentationMatrix, r: int) -> tuple[LaurentPoly, ...]:
    return p.elementary_ideal(r)


def first_ideal_gcd(p: PresentationMatrix) -> LaurentPoly:
    """gcd of the generators of E_1, unit-normalized; zero ideal gives 0."""
    gens = [g for g in p.elementary_ideal(1) if not g.is_zero()]
    if not gens:
        return LaurentPoly.zero(p.mu)
    return unit_normalize(gcd_many(gens))


def vanishes_at(gens, point: TorusPoint, tau_poly: float = DEFAULT_TAU_POLY) -> bool:
    """Whether every generator vanishes at omega, relative to coefficient mass."""
    for g in gens:
        if g.is_zero():
            continue
        if abs(eval_at(g, point)) > tau_poly * (1 + g.coefficient_mass()):
            return False
    return True


def _near_threshold(gens, point: TorusPoint, tau_poly: float) -> bool:
    for g in gens:
        if g.is_zero():
            continue
        v = abs(eval_at(g, point))
        cut = tau_poly * (1 + g.coefficient_mass())
        if cut / _UNCERTAIN_BAND < v < cut * _UNCERTAIN_BAND:
            return True
    return False


@dataclass(frozen=True)
class StratumReport:
    point: TorusPoint
    index: int
    predicted_nullity: int | None
    flags: frozenset[str]


def stratum_index(p: PresentationMatrix, point: TorusPoint,
                  tau_poly: float = DEFAULT_TAU_POLY) -> StratumReport:
    """The largest r whose elementary ideal vanishes at the sample.

    The nullity prediction is suppressed when more than two coordinates
    equal 1.
    """
    if point.mu != p.mu:
        raise InvalidInput(f"point arity {point.mu} != presentation arity {p.mu}")
    if point.is_basepoint():
        raise BasePoint("the stratification lives on the pointed torus")
    flags = set()
    index = 0
    for r in range(1, p.m_generators + 1):
        gens = p.elementary_ideal(r)
        if _near_threshold(gens, point, tau_poly):
            flags.add(FLAG_UNCERTAIN)
        if vanishes_at(gens, point, tau_poly):
            index = r
        else:
            break
    ones = len(point.unit_coordinates())
    if ones > 2:
        flags.add(FLAG_MORE_THAN_TWO_ONES)
        predicted = None
    else:
        predicted = index
    return StratumReport(point, index, predicted, frozenset(flags))


# -- file schema ----------------------------------------------------------------


def presentation_to_dict(p: PresentationMatrix) -> dict:
    return {
        "mu": p.mu,
        "n_relations": p.n_relations,
        "m_generators": p.m_generators,
        "entries": [[format_poly(q) for q in row] for row in p.entries],
    }


def presentation_from_dict(data: dict) -> PresentationMatrix:
    try:
        mu = int(data["mu"])
        entries = data["entries"]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"presentation record missing field: {exc}") from exc
    rows = [[parse_poly(text, mu=mu) for text in row] for row in entries]
    p = PresentationMatrix(mu, rows)
    if "n_relations" in data and int(data["n_relations"]) != p.n_relations:
        raise InvalidInput(f"n_relations={data['n_relations']} does not match {p.n_relations} rows")
    if "m_generators" in data and int(data["m_generators"]) != p.m_generators:
        raise InvalidInput(f"m_generators={data['m_generators']} does not match {p.m_generators} columns")
    return p


def load_presentation(path: str) -> PresentationMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return presentation_from_dict(json.load(fh))


def save_presentation(p: PresentationMatrix, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(presentation_to_dict(p), fh, indent=2)
        fh.write("\n")

"""Configurations of finite stable translation quivers.

A configuration is a vertex subset that is hom-orthogonal in the mesh
category of the quotient (one-dimensional endomorphisms, no homs between
distinct members) and covers every vertex (each vertex admits a nonzero
hom into some member).  Enumeration backtracks over vertices in (node,
level) order with orthogonality and covering-feasibility pruning; the
cardinality of every configuration equals the simple count of the type,
which is used as a cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dynkin import DynkinGraph, RfsType, num_simples, validate_rfs_type
from .meshcat import quotient_hom_table
from .ztquiver import StableTranslationQuiver, ZVert, automorphisms, quotient

Config = tuple[ZVert, ...]


def is_configuration(q: StableTranslationQuiver, subset) -> tuple[bool, str]:
    """Check the two defining conditions; reports the first violation."""
    members = tuple(sorted(set(subset)))
    for v in members:
        if v not in q.vertices:
            return False, f"{v} is not a vertex"
    table = quotient_hom_table(q)
    for e in members:
        d = table[(e, e)]
        if d != 1:
            return False, f"orthogonality: hom({e},{e}) = {d} != 1"
        for f in members:
            if e != f and table[(e, f)]:
                return False, f"orthogonality: hom({e},{f}) = {table[(e, f)]} != 0"
    for v in q.vertices:
        if not any(table[(v, f)] for f in members):
            return False, f"covering: no member receives a hom from {v}"
    return True, "configuration"


def enumerate_configurations(q: StableTranslationQuiver) -> list[Config]:
    """All configurations, canonically sorted."""
    card = num_simples(q.rfs_type)
    table = quotient_hom_table(q)
    candidates = sorted(
        (v for v in q.vertices if table[(v, v)] == 1),
        key=lambda v: (v[1], v[0]),
    )
    orthogonal = {
        (a, b)
        for a in candidates
        for b in candidates
        if a != b and not table[(a, b)] and not table[(b, a)]
    }
    # coverers[v]: candidate members receiving a nonzero hom from v
    coverers = {
        v: frozenset(c for c in candidates if table[(v, c)]) for v in q.vertices
    }
    out: list[Config] = []

    def extend(start: int, chosen: list[ZVert]):
        if len(chosen) == card:
            members = set(chosen)
            if all(coverers[v] & members for v in q.vertices):
                out.append(tuple(sorted(chosen)))
            return
        pool = [
            k
            for k in range(start, len(candidates))
            if all((candidates[k], c) in orthogonal for c in chosen)
        ]
        if len(chosen) + len(pool) < card:
            return
        avail = set(chosen) | {candidates[k] for k in pool}
        if not all(coverers[v] & avail for v in q.vertices):
            return
        for k in pool:
            chosen.append(candidates[k])
            extend(k + 1, chosen)
            chosen.pop()

    extend(0, [])
    return sorted(set(out))


@dataclass(frozen=True)
class Orbit:
    representative: Config
    size: int
    members: tuple[Config, ...]


def orbit_decomposition(q: StableTranslationQuiver, configs) -> list[Orbit]:
    """Partition configurations under the automorphisms of the quiver."""
    configs = sorted(set(tuple(sorted(c)) for c in configs))
    auts = automorphisms(q)
    remaining = set(configs)
    orbits = []
    for c in configs:
        if c not in remaining:
            continue
        members = sorted({tuple(sorted(phi[v] for v in c)) for phi in auts})
        for m in members:
            remaining.discard(m)
        orbits.append(Orbit(min(members), len(members), tuple(members)))
    return sorted(orbits, key=lambda o: o.representative)


@dataclass(frozen=True)
class TransitivityRow:
    rfs_type: str
    configurations: int
    orbits: int
    single_orbit: bool
    listed: bool


def in_single_orbit_list(t: RfsType) -> bool:
    """Membership in the families with one automorphism orbit of configurations."""
    g, f = t.graph, t.frequency
    if g.family == "A":
        if t.torsion == 1:
            s = int(f * g.rank)
            return g.rank == 2 or gcd(s, g.rank) == 1
        return t.torsion == 2 and g.rank == 3
    if g.family == "D":
        if t.torsion == 1:
            return g.rank == 6 and f.denominator == 3
        return t.torsion == 3 and g.rank == 4
    return False


def transitivity_list_check(
    max_rank: int = 5,
    max_s: int = 2,
    vertex_budget: int = 40,
    include_e: bool = False,
) -> list[TransitivityRow]:
    """Orbit counts over a capped grid of types, flagged against the
    single-orbit families; the check passes when flags and counts agree."""
    rows = []
    for t in _type_grid(max_rank, max_s, include_e):
        if t.graph.rank * int(t.frequency * (t.coxeter - 1)) > vertex_budget:
            continue
        q = quotient(t)
        configs = enumerate_configurations(q)
        orbits = orbit_decomposition(q, configs)
        rows.append(
            TransitivityRow(
                str(t),
                len(configs),
                len(orbits),
                len(orbits) == 1,
                in_single_orbit_list(t),
            )
        )
    return rows


def _type_grid(max_rank: int, max_s: int, include_e: bool):
    for rank in range(1, max_rank + 1):
        for s in range(1, max_s * rank + 1):
            t = RfsType(DynkinGraph("A", rank), Fraction(s, rank), 1)
            if validate_rfs_type(t)[0]:
                yield t
    for rank in range(3, max_rank + 1, 2):
        for s in range(1, max_s + 1):
            t = RfsType(DynkinGraph("A", rank), Fraction(s), 2)
            if validate_rfs_type(t)[0]:
                yield t
    for rank in range(4, max_rank + 3):
        for tor in (1, 2, 3):
            for den in (1, 3):
                for s in range(1, max_s + 1):
                    try:
                        t = RfsType(DynkinGraph("D", rank), Fraction(s, den), tor)
                    except Exception:
                        continue
                    if validate_rfs_type(t)[0]:
                        yield t
    if include_e:
        for rank in (6, 7, 8):
            for tor in (1, 2):
                t = RfsType(DynkinGraph("E", rank), Fraction(1), tor)
                if validate_rfs_type(t)[0]:
                    yield t

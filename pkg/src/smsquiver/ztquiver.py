"""Windows of the universal translation quiver ZQ and their finite quotients.

Vertices of ZQ are pairs (p, q): level p in Z, node q of the Dynkin tree.
For every oriented tree edge i -> j there are arrows (p,i) -> (p,j) and
(p,j) -> (p+1,i); the translation is tau(p,q) = (p-1,q).  Every arrow
raises the grading t(p,q) = 2p + depth(q) by exactly one.

A quotient is taken by the deck group generated by g = zeta* tau^{-r},
where zeta* is the level-corrected lift of a tree automorphism: it sends
(p, q) to (p + (depth(q) - depth(zeta q))/2, zeta q), which is the unique
grading-preserving lift.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .dynkin import DynkinGraph, GraphAutomorphism, RfsType, admissible_group

ZVert = tuple[int, int]


class WindowTooSmallError(ValueError):
    """A hom computation was asked to run in a window that cannot hold it."""


def arrows_out(graph: DynkinGraph, v: ZVert) -> list[ZVert]:
    p, q = v
    out = []
    for i, j in graph.oriented_edges():
        if i == q:
            out.append((p, j))
        if j == q:
            out.append((p + 1, i))
    return out


def arrows_in(graph: DynkinGraph, v: ZVert) -> list[ZVert]:
    p, q = v
    ins = []
    for i, j in graph.oriented_edges():
        if j == q:
            ins.append((p, i))
        if i == q:
            ins.append((p - 1, j))
    return ins


def t_grade(graph: DynkinGraph, v: ZVert) -> int:
    return 2 * v[0] + graph.depth(v[1])


@dataclass(frozen=True)
class Window:
    """Finite slice {(p,q) : p_min <= p <= p_max} of ZQ."""

    graph: DynkinGraph
    p_min: int
    p_max: int

    def __post_init__(self):
        if self.p_min > self.p_max:
            raise ValueError("empty window")

    @property
    def vertices(self) -> tuple[ZVert, ...]:
        return tuple(
            (p, q)
            for p in range(self.p_min, self.p_max + 1)
            for q in self.graph.nodes
        )

    @property
    def arrows(self) -> tuple[tuple[ZVert, ZVert], ...]:
        acc = []
        for v in self.vertices:
            for w in arrows_out(self.graph, v):
                if self.p_min <= w[0] <= self.p_max:
                    acc.append((v, w))
        return tuple(acc)

    def contains(self, v: ZVert) -> bool:
        return self.p_min <= v[0] <= self.p_max and v[1] in self.graph.nodes

    def tau(self, v: ZVert) -> ZVert | None:
        w = (v[0] - 1, v[1])
        return w if self.contains(w) else None


def zeta_level_shift(graph: DynkinGraph, zeta: GraphAutomorphism, node: int) -> int:
    d = graph.depth(node) - graph.depth(zeta(node))
    if d % 2:
        raise ValueError(f"automorphism has no grading-preserving lift at node {node}")
    return d // 2


@dataclass(frozen=True)
class StableTranslationQuiver:
    """Finite quotient ZQ / <zeta tau^{-r}> with canonical vertex section.

    Canonical representatives: within each deck orbit, levels are first
    normalized into [0, m*r) where m is the zeta-orbit length of the node,
    then the lexicographically least (p, q) is chosen.  The chosen lift of
    each vertex is the vertex itself (the identity section).
    """

    rfs_type: RfsType
    r: int
    zeta: GraphAutomorphism
    vertices: tuple[ZVert, ...]
    arrows: tuple[tuple[ZVert, ZVert], ...]
    tau: dict

    @property
    def graph(self) -> DynkinGraph:
        return self.rfs_type.graph

    def deck(self, v: ZVert, power: int = 1) -> ZVert:
        """Apply g^power with g = zeta* tau^{-r} to a ZQ vertex."""
        g, zeta, r = self.graph, self.zeta, self.r
        p, q = v
        if power >= 0:
            for _ in range(power):
                p += r
                p += zeta_level_shift(g, zeta, q)
                q = zeta(q)
        else:
            inv = zeta.inverse()
            for _ in range(-power):
                q = inv(q)
                p -= zeta_level_shift(g, zeta, q)
                p -= r
        return (p, q)

    def _node_orbit_len(self, q: int) -> int:
        k, cur = 1, self.zeta(q)
        while cur != q:
            cur = self.zeta(cur)
            k += 1
        return k

    def canonical(self, v: ZVert) -> ZVert:
        m = self._node_orbit_len(v[1])
        period = m * self.r
        best = None
        w = v
        for _ in range(m):
            p, q = w
            cand = (p % period, q)
            if best is None or cand < best:
                best = cand
            w = self.deck(w)
        assert best is not None
        return best

    def tau_of(self, v: ZVert) -> ZVert:
        return self.tau[v]

    def lift(self, v: ZVert, copies: int) -> list[ZVert]:
        """The first `copies` preimages of v under the covering, ascending by level."""
        if copies < 1:
            raise ValueError("copies must be >= 1")
        base = self.canonical(v)
        lifts = [self.deck(base, k) for k in range(copies)]
        assert all(a[0] < b[0] for a, b in zip(lifts, lifts[1:]))
        return lifts

    def arrows_out_of(self, v: ZVert) -> list[ZVert]:
        return [w for (u, w) in self.arrows if u == v]

    def to_json(self) -> str:
        idx = {v: i for i, v in enumerate(self.vertices)}
        return json.dumps(
            {
                "schema": 1,
                "type": str(self.rfs_type),
                "vertices": [list(v) for v in self.vertices],
                "arrows": [[list(a), list(b)] for a, b in sorted(self.arrows)],
                "tau": [idx[self.tau[v]] for v in self.vertices],
            },
            sort_keys=True,
        )

    def to_dot(self) -> str:
        lines = [f'digraph "{self.rfs_type}" {{']
        for v in self.vertices:
            lines.append(f'  "{v[0]},{v[1]}";')
        for a, b in sorted(self.arrows):
            lines.append(f'  "{a[0]},{a[1]}" -> "{b[0]},{b[1]}";')
        lines.append("}")
        return "\n".join(lines)


def quotient(t: RfsType) -> StableTranslationQuiver:
    """Build the stable translation quiver ZQ / <zeta tau^{-r}> of a valid type."""
    r, zeta = admissible_group(t)
    graph = t.graph
    q = StableTranslationQuiver(t, r, zeta, (), (), {})  # bootstrap for deck/canonical

    seen: set[ZVert] = set()
    verts: list[ZVert] = []
    for node in graph.nodes:
        m = q._node_orbit_len(node)
        for p in range(m * r):
            c = q.canonical((p, node))
            if c not in seen:
                seen.add(c)
                verts.append(c)
    verts.sort()
    assert len(verts) == graph.rank * r

    arrows = []
    for v in verts:
        outs = [q.canonical(w) for w in arrows_out(graph, v)]
        assert len(set(outs)) == len(outs)
        arrows.extend((v, w) for w in outs)
    tau = {v: q.canonical((v[0] - 1, v[1])) for v in verts}

    built = StableTranslationQuiver(t, r, zeta, tuple(verts), tuple(sorted(arrows)), tau)
    _check_mesh_symmetry(built)
    return built


def _check_mesh_symmetry(q: StableTranslationQuiver) -> None:
    arrow_set = set(q.arrows)
    for u, v in arrow_set:
        assert (q.tau[v], u) in arrow_set, f"mesh asymmetry at {v}"
    # tau must be a bijection
    assert sorted(q.tau.values()) == sorted(q.vertices)


def automorphisms(q: StableTranslationQuiver) -> list[dict]:
    """All arrow-preserving vertex permutations commuting with tau.

    Plain backtracking over tau-orbit representatives; images are pruned
    by in/out-degree and tau-orbit length.  Output is sorted and therefore
    deterministic; the identity and the residue of tau itself are members.
    """
    verts = list(q.vertices)
    arrow_set = set(q.arrows)
    outs = {v: sorted(q.arrows_out_of(v)) for v in verts}
    ins: dict[ZVert, list[ZVert]] = {v: [] for v in verts}
    for u, v in arrow_set:
        ins[v].append(u)

    orbit_of: dict[ZVert, int] = {}
    orbits: list[list[ZVert]] = []
    for v in verts:
        if v in orbit_of:
            continue
        orb = [v]
        orbit_of[v] = len(orbits)
        w = q.tau[v]
        while w != v:
            orbit_of[w] = len(orbits)
            orb.append(w)
            w = q.tau[w]
        orbits.append(orb)

    def invariant(v: ZVert):
        return (len(ins[v]), len(outs[v]), len(orbits[orbit_of[v]]))

    reps = [orb[0] for orb in orbits]
    found: list[dict] = []

    def consistent(phi: dict) -> bool:
        for u, v in arrow_set:
            pu, pv = phi.get(u), phi.get(v)
            if pu is not None and pv is not None and (pu, pv) not in arrow_set:
                return False
        return True

    def extend(i: int, phi: dict, used: set):
        if i == len(reps):
            found.append(dict(phi))
            return
        v = reps[i]
        orb = orbits[orbit_of[v]]
        for w in verts:
            if w in used or invariant(w) != invariant(v):
                continue
            # propagate along the tau-orbit and check closure
            images = []
            cur = w
            ok = True
            for _ in orb:
                if cur in used or cur in images:
                    ok = False
                    break
                images.append(cur)
                cur = q.tau[cur]
            if not ok or cur != w:
                continue
            for a, b in zip(orb, images):
                phi[a] = b
            if consistent(phi):
                extend(i + 1, phi, used | set(images))
            for a in orb:
                del phi[a]

    extend(0, {}, set())
    full = [phi for phi in found if sorted(phi.values()) == sorted(verts)]
    full.sort(key=lambda phi: tuple(phi[v] for v in verts))
    return full

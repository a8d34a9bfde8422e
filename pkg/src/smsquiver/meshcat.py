"""Hom dimensions in mesh categories of ZQ and of finite quotients.

Two routes are provided and must agree:

* `hom_dim_oracle` quotients the graded path space by the mesh ideal with
  exact rational linear algebra.  Degree by degree, paths ending at v split
  by their last arrow, so the hom space at v is the cokernel of the mesh
  map out of tau(v); the implementation tracks honest quotient projections,
  not just dimensions.
* `hom_dim_fast` is the integer knitting recursion (sum over incoming
  arrows minus the value at tau(v), clamped at zero).  Its clamping rule is
  validated against the oracle by the test suite, never assumed.

Quotient homs are covering sums over deck-group lifts of the target.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from .dynkin import DynkinGraph, coxeter_number
from .linalg import SpanTracker
from .ztquiver import (
    StableTranslationQuiver,
    Window,
    WindowTooSmallError,
    ZVert,
    arrows_in,
    t_grade,
)

CACHE_ENV = "SMSQUIVER_CACHE_DIR"


class SupportBandError(AssertionError):
    """A nonzero hom appeared outside the expected support band."""


@dataclass(frozen=True)
class HomTable:
    """Dimensions of Hom(source, -) over a window of ZQ."""

    graph: DynkinGraph
    source: ZVert
    window: tuple[int, int]
    dims: dict

    def dim(self, target: ZVert) -> int:
        return self.dims.get(target, 0)

    def support(self) -> list[ZVert]:
        return sorted(v for v, d in self.dims.items() if d)


def _window_for(graph: DynkinGraph, x: ZVert, y: ZVert | None, window) -> Window:
    h = coxeter_number(graph)
    if window is None:
        top = x[0] + 2 * h + 1
        if y is not None:
            top = max(top, y[0])
        return Window(graph, x[0], top)
    w = Window(graph, window[0], window[1])
    if not w.contains(x) or (y is not None and not w.contains(y)):
        raise WindowTooSmallError(
            f"window {window} must contain both endpoints; widen it"
        )
    if w.p_max - w.p_min < 2 * h + 1:
        raise WindowTooSmallError(
            f"window {window} narrower than 2h+2 = {2 * h + 2} slices; widen it"
        )
    return w


def _ordered_vertices(graph: DynkinGraph, win: Window, start: ZVert):
    verts = [v for v in win.vertices if t_grade(graph, v) >= t_grade(graph, start)]
    verts.sort(key=lambda v: (t_grade(graph, v), v))
    return verts


def oracle_table(graph: DynkinGraph, source: ZVert, window=None) -> HomTable:
    """Exact mesh-category hom dimensions from `source` over a window."""
    win = _window_for(graph, source, None, window)
    verts = _ordered_vertices(graph, win, source)
    dims: dict[ZVert, int] = {}
    # arrow_maps[(u, v)]: columns (one per basis class at u) of the
    # post-composition map Hom(x,u) -> Hom(x,v).
    arrow_maps: dict[tuple[ZVert, ZVert], list[tuple[Fraction, ...]]] = {}

    for v in verts:
        if v == source:
            dims[v] = 1
            continue
        ins = [u for u in arrows_in(graph, v) if win.contains(u)]
        ins = [u for u in ins if dims.get(u, 0) > 0]
        width = sum(dims[u] for u in ins)
        if width == 0:
            dims[v] = 0
            continue
        offset = {}
        acc = 0
        for u in ins:
            offset[u] = acc
            acc += dims[u]
        tv = (v[0] - 1, v[1])
        tracker = SpanTracker(width)
        if dims.get(tv, 0) > 0:
            # mesh relations: the image of Hom(x, tau v) under the maps
            # "compose with the arrow tau v -> u", stacked over all u -> v
            for col in range(dims[tv]):
                vec = [Fraction(0)] * width
                for u in ins:
                    cols = arrow_maps.get((tv, u))
                    if cols is None:
                        continue
                    for row, entry in enumerate(cols[col]):
                        vec[offset[u] + row] += entry
                tracker.add(vec)
        dims[v] = width - tracker.rank
        for u in ins:
            cols = []
            for k in range(dims[u]):
                e = [Fraction(0)] * width
                e[offset[u] + k] = Fraction(1)
                cols.append(tracker.quotient_coords(e))
            arrow_maps[(u, v)] = cols

    table = HomTable(graph, source, (win.p_min, win.p_max), dims)
    _assert_support_band(table)
    return table


def fast_table(graph: DynkinGraph, source: ZVert, window=None) -> HomTable:
    """Clamped additive recursion for the same dimensions."""
    win = _window_for(graph, source, None, window)
    verts = _ordered_vertices(graph, win, source)
    dims: dict[ZVert, int] = {}
    for v in verts:
        if v == source:
            dims[v] = 1
            continue
        total = sum(dims.get(u, 0) for u in arrows_in(graph, v) if win.contains(u))
        total -= dims.get((v[0] - 1, v[1]), 0)
        dims[v] = max(total, 0)
    table = HomTable(graph, source, (win.p_min, win.p_max), dims)
    _assert_support_band(table)
    return table


def _assert_support_band(table: HomTable) -> None:
    h = coxeter_number(table.graph)
    for (p, q), d in table.dims.items():
        if d and p - table.source[0] > h:
            raise SupportBandError(
                f"hom({table.source},({p},{q})) = {d} beyond {h} slices"
            )


_table_cache: dict[tuple, HomTable] = {}


def _cached_table(graph: DynkinGraph, node: int, oracle: bool = False) -> HomTable:
    """Table for source (0, node); other levels follow by tau-equivariance."""
    key = (graph.family, graph.rank, node, oracle)
    table = _table_cache.get(key)
    if table is None:
        table = _load_cached(key)
    if table is None:
        fn = oracle_table if oracle else fast_table
        table = fn(graph, (0, node))
        _store_cached(key, table)
    _table_cache[key] = table
    return table


def _cache_path(key) -> str | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    fam, rank, node, oracle = key
    tag = "oracle" if oracle else "fast"
    return os.path.join(root, f"hom_{fam}{rank}_q{node}_{tag}.json")


def _load_cached(key) -> HomTable | None:
    path = _cache_path(key)
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        raw = json.load(fh)
    if raw.get("schema") != 1:
        return None
    dims = {(int(p), int(q)): d for p, q, d in raw["dims"]}
    fam, rank, node, _ = key
    return HomTable(DynkinGraph(fam, rank), (0, node), tuple(raw["window"]), dims)


def _store_cached(key, table: HomTable) -> None:
    path = _cache_path(key)
    if not path:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    payload = {
        "schema": 1,
        "window": list(table.window),
        "dims": sorted([p, q, d] for (p, q), d in table.dims.items() if d),
    }
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)  # idempotent fill


def hom_dim_oracle(graph: DynkinGraph, x: ZVert, y: ZVert, window=None) -> int:
    if window is not None:
        _window_for(graph, x, y, window)
    if y[0] < x[0]:
        return 0
    table = oracle_table(graph, x, window or (x[0], max(y[0], x[0] + 2 * coxeter_number(graph) + 1)))
    return table.dim(y)


def hom_dim_fast(graph: DynkinGraph, x: ZVert, y: ZVert, window=None) -> int:
    if window is not None:
        _window_for(graph, x, y, window)
    if y[0] < x[0]:
        return 0
    shift = x[0]
    table = _cached_table(graph, x[1])
    target = (y[0] - shift, y[1])
    if target[0] > table.window[1]:
        return 0
    return table.dim(target)


def quotient_hom_dim(q: StableTranslationQuiver, e: ZVert, f: ZVert) -> int:
    """Covering sum: total hom from a fixed lift of e onto all lifts of f."""
    return quotient_hom_table(q)[(q.canonical(e), q.canonical(f))]


_quotient_cache: dict[str, dict] = {}


def quotient_hom_table(q: StableTranslationQuiver) -> dict:
    """All-pairs stable hom dimensions of a quotient, computed once."""
    key = str(q.rfs_type)
    cached = _quotient_cache.get(key)
    if cached is not None:
        return cached
    graph = q.graph
    h = coxeter_number(graph)
    table: dict[tuple[ZVert, ZVert], int] = {}
    for e in q.vertices:
        source_table = _cached_table(graph, e[1])
        for f in q.vertices:
            # sum over all deck translates of f whose level falls in the
            # support band; translates outside [0, 2h] contribute nothing
            # (guarded by the band assertion on the table itself).
            lo = -((f[0] + 3 * h) // q.r + 3)
            hi = (e[0] + 3 * h) // q.r + 3
            total = 0
            for j in range(lo, hi + 1):
                lift = q.deck(f, j)
                rel = (lift[0] - e[0], lift[1])
                if 0 <= rel[0] <= 2 * h:
                    total += source_table.dim(rel)
            table[(e, f)] = total
    _quotient_cache[key] = table
    return table

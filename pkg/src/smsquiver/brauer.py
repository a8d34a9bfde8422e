"""Brauer tree counting via canonical forms of plane trees.

A Brauer tree with d edges and multiplicity m is a plane tree (a tree with
a cyclic ordering of the edges around every vertex) together with, when
m >= 2, one distinguished exceptional vertex.  Isomorphism preserves the
cyclic orderings; counting is done by enumerating rooted plane trees and
deduplicating canonical forms taken over every choice of root vertex and
rotation.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def rooted_plane_trees(edges: int):
    """All rooted plane trees with `edges` edges as nested child tuples."""
    if edges == 0:
        yield ()
        return
    for first_size in range(edges):
        for child in rooted_plane_trees(first_size):
            for rest in rooted_plane_trees(edges - 1 - first_size):
                yield (child,) + rest


_rooted = rooted_plane_trees


def _tree_graph(tree):
    """Adjacency with cyclic neighbor order; vertex 0 is the root."""
    neighbors = {0: []}
    counter = itertools.count(1)

    def walk(node_id, children):
        for child in children:
            cid = next(counter)
            neighbors[node_id].append(cid)
            neighbors[cid] = [node_id]
            walk(cid, child)

    walk(0, tree)
    return neighbors


def _encode(neighbors, root, first, marked=None):
    """Serialize by DFS respecting cyclic order, entering at `first`."""

    def visit(v, parent):
        ring = neighbors[v]
        if parent is None:
            start = ring.index(first)
            ordered = ring[start:] + ring[:start]
        else:
            start = ring.index(parent)
            ordered = ring[start + 1 :] + ring[:start]
        mark = 1 if v == marked else 0
        return (mark,) + tuple(visit(w, v) for w in ordered)

    return visit(root, None)


def _canonical(neighbors, marked=None):
    forms = []
    for root, ring in neighbors.items():
        if not ring:
            forms.append(_encode(neighbors, root, None, marked))
            continue
        for first in ring:
            forms.append(_encode(neighbors, root, first, marked))
    return min(forms)


def _plane_tree_classes(edges: int):
    seen = {}
    for tree in _rooted(edges):
        neighbors = _tree_graph(tree)
        canon = _canonical(neighbors)
        if canon not in seen:
            seen[canon] = neighbors
    return list(seen.values())


@lru_cache(maxsize=None)
def count_brauer_trees(edges: int, multiplicity: int) -> int:
    """Isomorphism classes of Brauer trees with `edges` edges."""
    if edges < 1 or multiplicity < 1:
        raise ValueError("need edges >= 1 and multiplicity >= 1")
    classes = _plane_tree_classes(edges)
    if multiplicity == 1:
        return len(classes)
    marked = set()
    for neighbors in classes:
        for v in neighbors:
            marked.add(_canonical(neighbors, marked=v))
    return len(marked)


@lru_cache(maxsize=None)
def count_marked_extremal_trees(edges: int) -> int:
    """Multiplicity-one Brauer trees with a chosen extremal (leaf) vertex."""
    if edges < 1:
        raise ValueError("need edges >= 1")
    marked = set()
    for neighbors in _plane_tree_classes(edges):
        for v, ring in neighbors.items():
            if len(ring) <= 1:
                marked.add(_canonical(neighbors, marked=v))
    return len(marked)

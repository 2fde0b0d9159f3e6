"""Dual tree of the chord-bounded faces of an outerplanar instance.

The chords split the vertex cycle into m+1 faces; two faces are adjacent
when they share a chord, and the adjacency graph is a tree. Faces are
enumerated by a single stack scan over the cyclic vertex order, which makes
the face labeling deterministic: faces are numbered in completion order,
the chordless bottom face last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import RootNotDegreeOne
from .instance import Instance, _norm_chord


@dataclass(frozen=True)
class DualTree:
    faces: Tuple[Tuple[int, ...], ...]
    root: int
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    depth: Tuple[int, ...]
    # Chord between a face and its parent, oriented so the counterclockwise
    # vertex arc from tree_edge[f][0] to tree_edge[f][1] holds exactly the
    # subtree side of f. None for the root.
    tree_edge: Tuple[Optional[Tuple[int, int]], ...]

    @property
    def m(self) -> int:
        return len(self.faces) - 1

    def side_vertices(self, f: int) -> FrozenSet[int]:
        """Vertices of the faces in the subtree rooted at f."""
        out = set()
        stack = [f]
        while stack:
            g = stack.pop()
            out.update(self.faces[g])
            stack.extend(self.children[g])
        return frozenset(out)


def _enumerate_faces(n: int, chords: Tuple[Tuple[int, int], ...]):
    """Stack scan: each chord closes the face lying between its endpoints."""
    opens: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for c in chords:
        u, v = _norm_chord(c)
        opens[u].append((u, v))
    for u in range(n):
        opens[u].sort(key=lambda c: c[1], reverse=True)

    faces: List[Tuple[int, ...]] = []
    face_chord: List[Optional[Tuple[int, int]]] = []
    adjacency: List[Tuple[int, int, Tuple[int, int]]] = []
    # Stack entries: (vertex list, chord that will close it, face-under it).
    stack: List[Tuple[List[int], Optional[Tuple[int, int]]]] = [([], None)]
    pending: Dict[int, List[Tuple[int, int]]] = {}
    for c in chords:
        u, v = _norm_chord(c)
        pending.setdefault(v, []).append((u, v))
    for v in pending:
        pending[v].sort(key=lambda c: c[0], reverse=True)

    completed_below: List[List[int]] = [[]]
    for x in range(n):
        for c in pending.get(x, ()):
            verts, chord = stack.pop()
            below = completed_below.pop()
            assert chord == c, "crossing chords reached face enumeration"
            verts.append(x)
            fid = len(faces)
            faces.append(tuple(verts))
            face_chord.append(c)
            for child_fid in below:
                adjacency.append((fid, child_fid, face_chord[child_fid]))
            completed_below[-1].append(fid)
        stack[-1][0].append(x)
        for c in opens[x]:
            stack.append(([x], c))
            completed_below.append([])
    verts, chord = stack.pop()
    assert chord is None and not stack
    fid = len(faces)
    faces.append(tuple(verts))
    face_chord.append(None)
    for child_fid in completed_below.pop():
        adjacency.append((fid, child_fid, face_chord[child_fid]))
    return faces, adjacency


def build_dual_tree(inst: Instance, root_choice: Optional[int] = None) -> DualTree:
    n = inst.n
    faces, adjacency = _enumerate_faces(n, inst.chords)
    count = len(faces)
    neighbors: List[List[Tuple[int, Tuple[int, int]]]] = [[] for _ in range(count)]
    for a, b, chord in adjacency:
        neighbors[a].append((b, chord))
        neighbors[b].append((a, chord))

    if root_choice is not None:
        if not 0 <= root_choice < count:
            raise RootNotDegreeOne(f"no face {root_choice}")
        if count > 1 and len(neighbors[root_choice]) != 1:
            raise RootNotDegreeOne(
                f"face {root_choice} has tree degree {len(neighbors[root_choice])}")
        root = root_choice
    else:
        candidates = [f for f in range(count)
                      if len(neighbors[f]) == 1 or count == 1]
        root = min(candidates, key=lambda f: faces[f])

    parent: List[Optional[int]] = [None] * count
    depth: List[int] = [0] * count
    children: List[List[int]] = [[] for _ in range(count)]
    edge_to_parent: List[Optional[Tuple[int, int]]] = [None] * count
    order = [root]
    seen = {root}
    for f in order:
        for g, chord in neighbors[f]:
            if g in seen:
                continue
            seen.add(g)
            parent[g] = f
            depth[g] = depth[f] + 1
            children[f].append(g)
            edge_to_parent[g] = chord
            order.append(g)
    assert len(order) == count, "dual adjacency is not connected"

    dt = DualTree(
        faces=tuple(faces),
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(sorted(c)) for c in children),
        depth=tuple(depth),
        tree_edge=tuple(edge_to_parent),
    )
    # Orient each tree edge so the subtree side sits on the (u, v) arc.
    oriented: List[Optional[Tuple[int, int]]] = [None] * count
    for f in range(count):
        chord = dt.tree_edge[f]
        if chord is None:
            continue
        u, v = chord
        side = dt.side_vertices(f)
        witness = next(w for w in side if w != u and w != v)
        if 0 < (witness - u) % n < (v - u) % n:
            oriented[f] = (u, v)
        else:
            oriented[f] = (v, u)
    return DualTree(dt.faces, dt.root, dt.parent, dt.children, dt.depth,
                    tuple(oriented))


def subtree_vertices(dt: DualTree, f: int) -> FrozenSet[int]:
    """Vertices of every face outside the subtree rooted at f; for the root
    itself, the root face's vertices. This is the vertex set of the graph
    that remains after the subtree under f is cut away."""
    if f == dt.root:
        return frozenset(dt.faces[dt.root])
    inside = set()
    stack = [f]
    while stack:
        g = stack.pop()
        inside.add(g)
        stack.extend(dt.children[g])
    out = set()
    for g in range(len(dt.faces)):
        if g not in inside:
            out.update(dt.faces[g])
    return frozenset(out)

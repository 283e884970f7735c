"""Finite-depth automorphisms of the rooted d-ary tree, stored as portraits.

A depth-N portrait carries one permutation label per internal vertex (levels
0..N-1). A vertex of level n is a tuple of n digits in 1..d, the empty tuple
being the root. The action on a vertex applies, at each step, the label of
the original prefix to the next digit:

    image of (u1, ..., un) = (u1^label(), u2^label(u1), ..., un^label(u1..un-1))

Words of generators act left-to-right, so composition is in action order:
``apply(compose(g, h), v) == apply(h, apply(g, v))``.
"""

from __future__ import annotations

import functools
import json
from typing import Iterator, Mapping

from .errors import DepthError, ShapeError
from .perm import Perm

Vertex = tuple[int, ...]


class Portrait:
    """An immutable depth-N tree automorphism.

    Depth-0 portraits exist and form the trivial group. Deeper portraits are
    a root label plus d child portraits, the states at the first level.
    """

    __slots__ = ("arity", "depth", "root", "children", "_hash", "_is_identity")

    def __init__(self, root: Perm | None, children: tuple["Portrait", ...], arity: int = 3):
        if root is None:
            if children:
                raise ShapeError("depth-0 portrait cannot have children")
            depth = 0
            is_id = True
        else:
            if root.degree != arity or len(children) != arity:
                raise ShapeError("root label and child count must match arity")
            depths = {c.depth for c in children}
            if len(depths) != 1:
                raise ShapeError("children must share one depth")
            if any(c.arity != arity for c in children):
                raise ShapeError("children must share the arity")
            depth = children[0].depth + 1
            is_id = root.is_identity() and all(c._is_identity for c in children)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "depth", depth)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_is_identity", is_id)
        object.__setattr__(self, "_hash", hash((arity, depth, root, children)))

    def __setattr__(self, name, value):
        raise AttributeError("Portrait is immutable")

    def is_identity(self) -> bool:
        return self._is_identity

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, Portrait)
            and self._hash == other._hash
            and self.arity == other.arity
            and self.depth == other.depth
            and self.root == other.root
            and self.children == other.children
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<Portrait arity={self.arity} depth={self.depth} id={self._is_identity}>"

    def label(self, vertex: Vertex) -> Perm:
        """Label of an internal vertex (level < depth)."""
        node = self
        for digit in vertex:
            _check_digit(digit, self.arity)
            node = node.children[digit - 1]
        if node.root is None:
            raise DepthError(f"vertex {vertex} has level {len(vertex)} >= depth {self.depth}")
        return node.root

    def labels(self) -> dict[Vertex, Perm]:
        """All internal-vertex labels, keyed by vertex."""
        out: dict[Vertex, Perm] = {}
        stack: list[tuple[Vertex, Portrait]] = [((), self)]
        while stack:
            vertex, node = stack.pop()
            if node.root is None:
                continue
            out[vertex] = node.root
            for i, child in enumerate(node.children):
                stack.append((vertex + (i + 1,), child))
        return out


@functools.lru_cache(maxsize=None)
def identity(depth: int, arity: int = 3) -> Portrait:
    """The identity portrait of the given depth."""
    if depth < 0:
        raise DepthError("depth must be >= 0")
    if depth == 0:
        return Portrait(None, (), arity)
    child = identity(depth - 1, arity)
    return Portrait(Perm.identity(arity), (child,) * arity, arity)


def from_labels(depth: int, labels: Mapping[Vertex, Perm], arity: int = 3) -> Portrait:
    """Build a portrait from a map of internal-vertex labels.

    Vertices absent from the map get the identity label.
    """
    for v in labels:
        if len(v) >= depth:
            raise DepthError(f"label at {v} lies at level >= depth {depth}")
        for digit in v:
            _check_digit(digit, arity)

    def build(vertex: Vertex, d: int) -> Portrait:
        if d == 0:
            return identity(0, arity)
        root = labels.get(vertex, Perm.identity(arity))
        children = tuple(build(vertex + (i,), d - 1) for i in range(1, arity + 1))
        return Portrait(root, children, arity)

    return build((), depth)


def _check_digit(digit: int, arity: int) -> None:
    if not 1 <= digit <= arity:
        raise ShapeError(f"digit {digit} outside 1..{arity}")


def apply(g: Portrait, v: Vertex) -> Vertex:
    """Image of a vertex of level <= depth(g) under the portrait action."""
    if len(v) > g.depth:
        raise DepthError(f"vertex level {len(v)} exceeds portrait depth {g.depth}")
    node = g
    out = []
    for digit in v:
        _check_digit(digit, g.arity)
        out.append(node.root.apply(digit))
        node = node.children[digit - 1]
    return tuple(out)


def compose(g: Portrait, h: Portrait) -> Portrait:
    """The automorphism "g then h"."""
    if g.arity != h.arity or g.depth != h.depth:
        raise ShapeError("portraits must share arity and depth")
    if g.depth == 0:
        return g
    if g._is_identity:
        return h
    if h._is_identity:
        return g
    # state of gh at i is (state of g at i) followed by (state of h at i^g)
    root = g.root * h.root
    children = tuple(
        compose(g.children[i - 1], h.children[g.root.apply(i) - 1])
        for i in range(1, g.arity + 1)
    )
    return Portrait(root, children, g.arity)


def inverse(g: Portrait) -> Portrait:
    """The inverse automorphism."""
    if g.depth == 0 or g._is_identity:
        return g
    root = g.root.inverse()
    children = tuple(
        inverse(g.children[root.apply(j) - 1]) for j in range(1, g.arity + 1)
    )
    return Portrait(root, children, g.arity)


def state_at(g: Portrait, u: Vertex) -> Portrait:
    """The state of g at u: the depth-(N-|u|) action on the subtree at u."""
    if len(u) > g.depth:
        raise DepthError(f"vertex level {len(u)} exceeds portrait depth {g.depth}")
    node = g
    for digit in u:
        _check_digit(digit, g.arity)
        node = node.children[digit - 1]
    return node


def embed(u: Vertex, g: Portrait) -> Portrait:
    """The automorphism acting as g on the subtree at u and trivially outside."""
    if not u:
        return g
    _check_digit(u[0], g.arity)
    sub = embed(u[1:], g)
    trivial = identity(sub.depth, g.arity)
    children = tuple(sub if i == u[0] else trivial for i in range(1, g.arity + 1))
    return Portrait(Perm.identity(g.arity), children, g.arity)


def level_vertices(n: int, arity: int = 3) -> Iterator[Vertex]:
    """All level-n vertices in lexicographic order."""
    if n == 0:
        yield ()
        return
    for prefix in level_vertices(n - 1, arity):
        for digit in range(1, arity + 1):
            yield prefix + (digit,)


def lex_index(v: Vertex, arity: int = 3) -> int:
    """1-based lexicographic index of a vertex among its level."""
    idx = 0
    for digit in v:
        _check_digit(digit, arity)
        idx = idx * arity + (digit - 1)
    return idx + 1


def vertex_of_index(index: int, level: int, arity: int = 3) -> Vertex:
    """Inverse of lex_index at a fixed level."""
    if not 1 <= index <= arity**level:
        raise ValueError(f"index {index} outside 1..{arity**level}")
    rem = index - 1
    digits = []
    for _ in range(level):
        rem, d = divmod(rem, arity)
        digits.append(d + 1)
    return tuple(reversed(digits))


def leaf_permutation(g: Portrait, n: int) -> Perm:
    """The permutation of lex indices 1..d^n induced on level-n vertices."""
    if n > g.depth:
        raise DepthError(f"level {n} exceeds portrait depth {g.depth}")
    images = [0] * (g.arity**n)
    for v in level_vertices(n, g.arity):
        images[lex_index(v, g.arity) - 1] = lex_index(apply(g, v), g.arity) - 1
    return Perm(images)


# -- serialization ---------------------------------------------------------


def to_json_dict(g: Portrait) -> dict:
    """JSON portrait format; identity labels are omitted."""
    labels = {
        ",".join(map(str, v)): list(p.one_based())
        for v, p in sorted(g.labels().items())
        if not p.is_identity()
    }
    return {"arity": g.arity, "depth": g.depth, "labels": labels}


def to_json(g: Portrait) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json_dict(data: Mapping) -> Portrait:
    arity = int(data["arity"])
    depth = int(data["depth"])
    labels: dict[Vertex, Perm] = {}
    for key, images in data.get("labels", {}).items():
        vertex = tuple(int(s) for s in key.split(",")) if key else ()
        labels[vertex] = Perm.from_one_based(images)
    return from_labels(depth, labels, arity)


def from_json(text: str) -> Portrait:
    return from_json_dict(json.loads(text))


def to_dot(g: Portrait, name: str = "portrait") -> str:
    """Graphviz DOT export: one node per vertex, internal nodes labeled
    with their permutation in cycle notation."""
    lines = [f"digraph {name} {{"]
    for level in range(g.depth + 1):
        for v in level_vertices(level, g.arity):
            node_id = ",".join(map(str, v)) or "root"
            if level < g.depth:
                label = g.label(v).cycle_string()
            else:
                label = ""
            lines.append(f'  "{node_id}" [label="{label}"];')
            if v:
                parent = ",".join(map(str, v[:-1])) or "root"
                lines.append(f'  "{parent}" -> "{node_id}";')
    lines.append("}")
    return "\n".join(lines)

"""Permutation groups via deterministic Schreier-Sims stabilizer chains.

Orders are exact big integers; membership is by sifting. Base points can be
forced, which makes pointwise stabilizers of a chosen point set fall out of
the chain; kernels of block actions are computed that way on a domain
extended by one point per block.
"""

from __future__ import annotations

import logging
import threading
from collections import deque
from typing import Iterable, Sequence

from .errors import InvalidBlocksError, NotASubgroupError, ShapeError
from .perm import Perm

logger = logging.getLogger(__name__)

_Tuple = tuple[int, ...]


def _mult(p: _Tuple, q: _Tuple) -> _Tuple:
    """Apply p, then q."""
    return tuple(map(q.__getitem__, p))


def _inv(p: _Tuple) -> _Tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


class _Level:
    __slots__ = ("base", "gens", "transversal", "inverse_transversal")

    def __init__(self, base: int, identity: _Tuple):
        self.base = base
        # All strong generators fixing the bases of the shallower levels;
        # the orbit of this level's base is computed under exactly this set.
        self.gens: list[_Tuple] = []
        self.transversal: dict[int, _Tuple] = {base: identity}
        self.inverse_transversal: dict[int, _Tuple] = {base: identity}


class _Chain:
    """Incremental deterministic Schreier-Sims.

    After every completed add_generator call the structure is a verified
    base and strong generating set for everything added so far: at each
    level, every Schreier generator of the base orbit sifts to the identity
    through the deeper levels.
    """

    def __init__(self, degree: int, forced_base: Sequence[int] = ()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[_Level] = []
        self._pending: list[deque] = []
        for b in forced_base:
            self._new_level(b)
        self.forced = len(self.levels)

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def sift(self, p: _Tuple, start: int = 0) -> tuple[_Tuple, int]:
        """Strip p through the chain; returns (residue, stuck level index)."""
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            point = p[level.base]
            if point == level.base:
                continue
            u_inv = level.inverse_transversal.get(point)
            if u_inv is None:
                return p, i
            p = _mult(p, u_inv)
        return p, len(self.levels)

    def contains(self, p: _Tuple) -> bool:
        residue, _ = self.sift(p)
        return residue == self.identity

    def add_generator(self, p: _Tuple) -> bool:
        """Add a generator; returns False if it was already a member."""
        residue, stuck = self.sift(p)
        if residue == self.identity:
            return False
        self._adjoin(residue, 0, stuck)
        self._drain()
        return True

    def strong_generators(self, start: int = 0) -> list[_Tuple]:
        """Generators of the pointwise stabilizer of the first `start` bases."""
        if start >= len(self.levels):
            return []
        # levels[start].gens is exactly the strong generators fixing the
        # bases of all shallower levels
        return list(self.levels[start].gens)

    # -- internals ---------------------------------------------------------

    def _new_level(self, base: int) -> None:
        self.levels.append(_Level(base, self.identity))
        self._pending.append(deque())

    def _adjoin(self, h: _Tuple, lo: int, hi: int) -> None:
        """Install a new strong generator at levels lo..hi.

        h fixes the bases of levels < hi and moves level hi's base (or all
        existing bases when hi opens a new level), so it belongs to every
        stabilizer set from lo down to hi.
        """
        if hi == len(self.levels):
            base = next(i for i, j in enumerate(h) if i != j)
            self._new_level(base)
        for l in range(lo, hi + 1):
            level = self.levels[l]
            level.gens.append(h)
            old_points = list(level.transversal)
            new_points = self._extend_orbit(level, h)
            queue = self._pending[l]
            for pt in old_points:
                queue.append((pt, h))
            for pt in new_points:
                for s in level.gens:
                    queue.append((pt, s))

    def _drain(self) -> None:
        """Process pending Schreier pairs, deepest level first."""
        identity = self.identity
        while True:
            l = len(self.levels) - 1
            while l >= 0 and not self._pending[l]:
                l -= 1
            if l < 0:
                return
            level = self.levels[l]
            queue = self._pending[l]
            while queue:
                point, s = queue.popleft()
                u = level.transversal[point]
                image = s[point]
                schreier = _mult(_mult(u, s), level.inverse_transversal[image])
                if schreier == identity:
                    continue
                residue, stuck = self.sift(schreier, l + 1)
                if residue != identity:
                    self._adjoin(residue, l + 1, stuck)
                    if stuck > l:
                        break  # drain the deeper levels before continuing
            # loop re-scans for the deepest pending level

    def _extend_orbit(self, level: _Level, gen: _Tuple) -> list[int]:
        """Grow the orbit with one extra generator; returns new points."""
        new_points: list[int] = []
        # The old orbit was closed under the old generators, so it suffices
        # to push the new generator across it and then close from new points.
        for point in list(level.transversal):
            image = gen[point]
            if image not in level.transversal:
                t = _mult(level.transversal[point], gen)
                level.transversal[image] = t
                level.inverse_transversal[image] = _inv(t)
                new_points.append(image)
        queue = list(new_points)
        while queue:
            point = queue.pop()
            u = level.transversal[point]
            for g in level.gens:
                image = g[point]
                if image not in level.transversal:
                    t = _mult(u, g)
                    level.transversal[image] = t
                    level.inverse_transversal[image] = _inv(t)
                    new_points.append(image)
                    queue.append(image)
        return new_points


class PermGroup:
    """A permutation group on 1..degree with a lazily built stabilizer chain."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Perm] = (),
        forced_base: Sequence[int] = (),
        _chain: "_Chain | None" = None,
    ):
        gens: list[Perm] = []
        seen: set[_Tuple] = set()
        for g in generators:
            if g.degree != degree:
                raise ShapeError(f"generator degree {g.degree} != {degree}")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._forced_base = tuple(forced_base)
        self._chain = _chain
        self._lock = threading.Lock()

    # -- chain -------------------------------------------------------------

    def _get_chain(self) -> _Chain:
        with self._lock:
            if self._chain is None:
                chain = _Chain(self.degree, self._forced_base)
                for g in self.generators:
                    chain.add_generator(g.images)
                self._chain = chain
                logger.info(
                    "built chain: degree=%d gens=%d order=%d levels=%d",
                    self.degree, len(self.generators), chain.order(),
                    len(chain.levels),
                )
            return self._chain

    def order(self) -> int:
        return self._get_chain().order()

    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            raise ShapeError(f"degree mismatch: {g.degree} != {self.degree}")
        return self._get_chain().contains(g.images)

    def same_subgroup_as(self, other: "PermGroup") -> bool:
        """Equality as subgroups of the symmetric group on the same points."""
        if self.degree != other.degree:
            raise ShapeError("degree mismatch")
        return (
            all(self.contains(g) for g in other.generators)
            and self.order() == other.order()
        )

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        """Subgroup fixing every listed 1-based point."""
        zero_based = [p - 1 for p in points]
        for p in zero_based:
            if not 0 <= p < self.degree:
                raise ShapeError(f"point outside 1..{self.degree}")
        chain = _Chain(self.degree, zero_based)
        for g in self.generators:
            chain.add_generator(g.images)
        gens = [Perm(t) for t in chain.strong_generators(len(zero_based))]
        return PermGroup(self.degree, gens)

    def point_stabilizers_on_orbit(self, point: int) -> dict[int, "PermGroup"]:
        """Stabilizer of each point in the orbit of the given 1-based point.

        One chain is built with the point as first base; the other
        stabilizers are its conjugates by transversal elements.
        """
        chain = _Chain(self.degree, [point - 1])
        for g in self.generators:
            chain.add_generator(g.images)
        stab_gens = chain.strong_generators(1)
        level = chain.levels[0]
        out: dict[int, PermGroup] = {}
        for image in sorted(level.transversal):
            t = level.transversal[image]
            t_inv = level.inverse_transversal[image]
            gens = [Perm(_mult(_mult(t_inv, s), t)) for s in stab_gens]
            out[image + 1] = PermGroup(self.degree, gens)
        return out

    def orbit(self, point: int) -> list[int]:
        """Sorted orbit of a 1-based point under the generators."""
        seen = {point - 1}
        frontier = [point - 1]
        images = [g.images for g in self.generators]
        while frontier:
            nxt = []
            for p in frontier:
                for g in images:
                    q = g[p]
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return [p + 1 for p in sorted(seen)]

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} gens={len(self.generators)}>"


# -- module-level operations -------------------------------------------------


def group_order(group: PermGroup) -> int:
    """Exact order of the generated group."""
    return group.order()


def contains(group: PermGroup, g: Perm) -> bool:
    """Membership via sifting through the stabilizer chain."""
    return group.contains(g)


def subgroup_index(group: PermGroup, subgroup: PermGroup) -> int:
    """Index of a verified subgroup; exact integer."""
    if subgroup.degree != group.degree:
        raise ShapeError("degree mismatch")
    for g in subgroup.generators:
        if not group.contains(g):
            raise NotASubgroupError(f"generator {g!r} lies outside the group")
    order, sub_order = group.order(), subgroup.order()
    quotient, remainder = divmod(order, sub_order)
    if remainder:
        raise AssertionError("subgroup order does not divide group order")
    return quotient


def perm_commutator(p: Perm, q: Perm) -> Perm:
    return p.inverse() * q.inverse() * p * q


def normal_closure(group: PermGroup, seeds: Sequence[Perm]) -> PermGroup:
    """Smallest normal subgroup of the group containing the seeds."""
    for s in seeds:
        if not group.contains(s):
            raise NotASubgroupError(f"seed {s!r} lies outside the group")
    chain = _Chain(group.degree)
    gens: list[Perm] = []
    queue = deque(s for s in seeds if not s.is_identity())
    generator_images = [(g.images, g.inverse().images) for g in group.generators]
    while queue:
        candidate = queue.popleft()
        if not chain.add_generator(candidate.images):
            continue
        gens.append(candidate)
        for g, g_inv in generator_images:
            conj = _mult(_mult(g_inv, candidate.images), g)
            queue.append(Perm(conj))
    return PermGroup(group.degree, gens, _chain=chain)


def derived_subgroup(group: PermGroup) -> PermGroup:
    """Normal closure of the commutators of the generators."""
    seeds = [
        perm_commutator(p, q)
        for i, p in enumerate(group.generators)
        for q in group.generators[i + 1 :]
    ]
    return normal_closure(group, seeds)


def is_elementary_abelian(group: PermGroup, p: int) -> bool:
    """True iff the group is abelian with every generator of order dividing p."""
    gens = group.generators
    for i, g in enumerate(gens):
        power = g
        for _ in range(p - 1):
            power = power * g
        if not power.is_identity():
            return False
        for h in gens[i + 1 :]:
            if g * h != h * g:
                return False
    return True


def enumerate_elements(group: PermGroup, limit: int = 5000) -> set[Perm]:
    """All elements by closure under multiplication; guarded by a limit."""
    elements = {Perm.identity(group.degree)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for g in group.generators:
                y = x * g
                if y not in elements:
                    if len(elements) >= limit:
                        raise ShapeError(f"group larger than limit {limit}")
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return elements


# -- block structure ---------------------------------------------------------


def _block_count(degree: int, block_size: int) -> int:
    count, rem = divmod(degree, block_size)
    if rem or block_size <= 0:
        raise ShapeError(f"degree {degree} is not a multiple of block size {block_size}")
    return count


def extend_with_blocks(group: PermGroup, block_size: int) -> PermGroup:
    """Adjoin one point per block of consecutive points.

    Point degree+k (1-based) tracks block k. Raises InvalidBlocksError when
    a generator fails to map blocks to blocks.
    """
    count = _block_count(group.degree, block_size)
    extended = []
    for g in group.generators:
        block_image = []
        for b in range(count):
            first = g.images[b * block_size]
            image_block, offset = divmod(first, block_size)
            members = {g.images[b * block_size + i] // block_size for i in range(block_size)}
            if members != {image_block}:
                raise InvalidBlocksError(
                    f"generator {g!r} splits block {b + 1} of size {block_size}"
                )
            block_image.append(group.degree + image_block)
        extended.append(Perm(g.images + tuple(block_image)))
    return PermGroup(group.degree + count, extended)


def embed_in_block(p: Perm, block: int, block_count: int) -> Perm:
    """Spread a degree-k permutation onto block `block` (0-based) of
    block_count consecutive size-k blocks, acting trivially elsewhere."""
    size = p.degree
    images = list(range(size * block_count))
    offset = block * size
    for i in range(size):
        images[offset + i] = offset + p.images[i]
    return Perm(images)


def restrict(group: PermGroup, points: Sequence[int]) -> PermGroup:
    """Restriction to an invariant set of 1-based points, renumbered 1..k."""
    index = {p - 1: i for i, p in enumerate(points)}
    gens = []
    for g in group.generators:
        images = [0] * len(points)
        for old, new in index.items():
            image = g.images[old]
            if image not in index:
                raise ShapeError(f"point set not invariant under {g!r}")
            images[new] = index[image]
        gens.append(Perm(images))
    return PermGroup(len(points), gens)


def kernel_of_level_action(group: PermGroup, n: int, arity: int = 3) -> PermGroup:
    """Kernel of the induced action on the level-n blocks of leaves.

    The group must act on arity**N points, lex-indexed leaves, so level-n
    vertices are blocks of arity**(N-n) consecutive points. Realized as the
    pointwise stabilizer of the block points on the extended domain, with
    the block points forced to the front of the base.
    """
    degree = group.degree
    total = 1
    big_n = 0
    while total < degree:
        total *= arity
        big_n += 1
    if total != degree:
        raise ShapeError(f"degree {degree} is not a power of {arity}")
    if not 0 <= n <= big_n:
        raise ShapeError(f"level {n} outside 0..{big_n}")
    if n == 0:
        return group
    if n == big_n:
        return PermGroup(degree)
    block_size = arity ** (big_n - n)
    extended = extend_with_blocks(group, block_size)
    block_points = list(range(degree + 1, extended.degree + 1))
    stab = extended.pointwise_stabilizer(block_points)
    return restrict(stab, list(range(1, degree + 1)))


def group_to_json_dict(group: PermGroup) -> dict:
    return {
        "degree": group.degree,
        "generators": [list(g.one_based()) for g in group.generators],
        "order": group.order(),
    }

"""Word algebra over the involutive alphabet {a, b, c}.

The three letters follow the wreath recursion

    a = (a, 1, 1) (2 3)    b = (1, b, 1) (1 3)    c = (1, 1, c) (1 2)

so each letter keeps a single nontrivial first-level state (itself) and
permutes the other two subtrees. Every letter is an involution, hence words
never need formal inverses: the inverse of a word is its reversal, and the
only rewriting ever applied is free cancellation xx -> empty.
"""

from __future__ import annotations

import functools
from typing import Callable, Iterable, Sequence

from . import automorphism
from .automorphism import Portrait
from .errors import ShapeError
from .perm import Perm

ALPHABET = "abc"

# Root permutations of the generators; the cycle (1 2 3) maps 1->2->3->1.
ROOT_PERMS = {
    "a": Perm.from_cycles(3, [(2, 3)]),
    "b": Perm.from_cycles(3, [(1, 3)]),
    "c": Perm.from_cycles(3, [(1, 2)]),
}

# Coordinate (1-based) of the letter's single nontrivial state.
_HOME = {"a": 1, "b": 2, "c": 3}

# Words generating the first-level stabilizer.
LEVEL1_STABILIZER_WORDS = ("acab", "abac", "bcba", "babc")


def check_word(word: str) -> str:
    for ch in word:
        if ch not in ALPHABET:
            raise ValueError(f"letter {ch!r} outside alphabet {ALPHABET!r}")
    return word


def free_reduce(word: str) -> str:
    """Cancel adjacent equal letters until none remain."""
    out: list[str] = []
    for ch in check_word(word):
        if out and out[-1] == ch:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def inverse_word(word: str) -> str:
    """Inverse by reversal; every letter is an involution."""
    return check_word(word)[::-1]


def conjugate(x: str, y: str) -> str:
    """x conjugated by y: y^-1 x y."""
    return free_reduce(inverse_word(y) + x + y)


def commutator(x: str, y: str) -> str:
    """[x, y] = x^-1 y^-1 x y."""
    return free_reduce(inverse_word(x) + inverse_word(y) + x + y)


def tau(word: str) -> str:
    """The substitution endomorphism a -> a, b -> cbc, c -> bcb."""
    table = {"a": "a", "b": "cbc", "c": "bcb"}
    return free_reduce("".join(table[ch] for ch in check_word(word)))


def tau_power(word: str, n: int) -> str:
    for _ in range(n):
        word = tau(word)
    return word


def parity_vector(word: str) -> tuple[int, int, int]:
    """Letter counts mod 2; zero exactly on words of the derived subgroup."""
    check_word(word)
    return tuple(word.count(ch) % 2 for ch in ALPHABET)  # type: ignore[return-value]


def word_states(word: str) -> tuple[tuple[str, str, str], Perm]:
    """First-level decomposition of a word.

    Returns the three state words (freely reduced) and the root permutation.
    Each letter lands in the single state whose current image is the letter's
    home coordinate, then multiplies the running root permutation.
    """
    states: list[list[str]] = [[], [], []]
    root = Perm.identity(3)
    for ch in check_word(word):
        home = _HOME[ch]
        coordinate = root.inverse().apply(home)
        bucket = states[coordinate - 1]
        if bucket and bucket[-1] == ch:
            bucket.pop()
        else:
            bucket.append(ch)
        root = root * ROOT_PERMS[ch]
    return tuple("".join(s) for s in states), root  # type: ignore[return-value]


@functools.lru_cache(maxsize=None)
def _evaluate_reduced(word: str, depth: int) -> Portrait:
    if depth == 0:
        return automorphism.identity(0)
    if not word:
        return automorphism.identity(depth)
    states, root = word_states(word)
    children = tuple(_evaluate_reduced(s, depth - 1) for s in states)
    return Portrait(root, children)


def evaluate(word: str, depth: int) -> Portrait:
    """The depth-N portrait of the group element spelled by the word."""
    if depth < 0:
        raise ShapeError("depth must be >= 0")
    return _evaluate_reduced(free_reduce(word), depth)


def check_relator(word: str, depth: int) -> bool:
    """True iff the word evaluates to the identity at the given depth."""
    return evaluate(word, depth).is_identity()


# -- relators ----------------------------------------------------------------


def _cj(x: str, y: str) -> str:
    return conjugate(x, y)


_AB = commutator("a", "b")
_BA = commutator("b", "a")
_AC = commutator("a", "c")
_CA = commutator("c", "a")
_BC = commutator("b", "c")
_CB = commutator("c", "b")

RELATORS: dict[str, str] = {
    "w1": free_reduce(_BA + _BC + _CA + _cj(_AC, "b") + _cj(_AB, "c") + _CB),
    "w2": free_reduce(_cj(_BC, "a") + _CB + _BA + _CA + _AB + _cj(_AC, "b")),
    "w3": free_reduce(
        _CB + _AB + _cj(_BC, "a") + _CB + _CB + _BA + _cj(_BC, "a") + _cj(_BC, "a")
    ),
    "w4": free_reduce(
        _cj(_BC, "a") + _cj(_AB, "c") + _BA + _BA + _AC + _cj(_AB, "c") + _CA + _CB
    ),
}

INVOLUTION_RELATORS = ("aa", "bb", "cc")


def relator_family(max_tau: int) -> dict[str, str]:
    """The involution relators plus tau-iterates of w1..w4 up to max_tau."""
    out = {f"{w[0]}^2": w for w in INVOLUTION_RELATORS}
    for name, word in RELATORS.items():
        for n in range(max_tau + 1):
            key = name if n == 0 else f"tau^{n}({name})"
            out[key] = tau_power(word, n)
    return out


# -- Reidemeister-Schreier ---------------------------------------------------


def schreier_generators(
    generator_words: Sequence[str],
    act: Callable[[int, str], int],
    points: Iterable[int],
    base_point: int,
    transversal: dict[int, str] | None = None,
) -> tuple[list[str], dict[int, str]]:
    """Schreier generators of the stabilizer of a point in a word action.

    ``act(point, word)`` must give the image of a point under a word. When no
    transversal is supplied, one is grown breadth-first from the base point
    in the given generator order. Generators are freely reduced (xx -> empty
    only); trivial ones are dropped, duplicates kept out, order deterministic.
    """
    points = list(points)
    if transversal is None:
        transversal = {base_point: ""}
        frontier = [base_point]
        while frontier:
            nxt = []
            for p in frontier:
                for gen in generator_words:
                    q = act(p, gen)
                    if q not in transversal:
                        transversal[q] = free_reduce(transversal[p] + gen)
                        nxt.append(q)
            frontier = nxt
    reachable = set(transversal)
    if set(points) - reachable:
        raise ValueError("transversal does not cover the orbit")

    out: list[str] = []
    seen: set[str] = set()
    for p in sorted(transversal):
        rep = transversal[p]
        for gen in generator_words:
            q = act(p, gen)
            word = free_reduce(rep + gen + inverse_word(transversal[q]))
            if word and word not in seen:
                seen.add(word)
                out.append(word)
    return out, transversal


def _vertex_action(point: int, word: str) -> int:
    """Image of a first-level vertex under a word."""
    for ch in word:
        point = ROOT_PERMS[ch].apply(point)
    return point


def schreier_stab1_generators() -> tuple[str, ...]:
    """Words generating the first-level stabilizer.

    Two Reidemeister-Schreier stages: first the stabilizer of vertex 1 with
    transversal {empty, c, b}, then within it the stabilizer of vertex 2 with
    transversal {empty, a}. Fixing two of the three first-level vertices
    fixes the third, so the result stabilizes the whole level.
    """
    stage1, _ = schreier_generators(
        list(ALPHABET),
        _vertex_action,
        points=(1, 2, 3),
        base_point=1,
        transversal={1: "", 2: "c", 3: "b"},
    )
    stage2, _ = schreier_generators(
        stage1,
        _vertex_action,
        points=(2, 3),
        base_point=2,
        transversal={2: "", 3: "a"},
    )
    return tuple(stage2)

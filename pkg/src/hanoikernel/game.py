"""The three-peg disk-moving game behind the tree action.

A state of the n-disk game is a sequence of n pegs, smallest disk first;
every such sequence is legal because smaller disks always sit on top. Each
of the three moves transfers the smallest disk available on its peg pair,
which toggles the first occurrence of either peg in the sequence. States
are exactly the level-n vertices, and the moves agree with the portrait
action of the letters a, b, c.
"""

from __future__ import annotations

import random
from collections import deque

from . import automorphism, words
from .errors import ResourceLimitError

GameState = tuple[int, ...]

# the peg pair each move exchanges
MOVE_PAIRS = {"a": (2, 3), "b": (1, 3), "c": (1, 2)}

SOLVE_DISK_CAP = 12


def check_state(state: GameState) -> GameState:
    for peg in state:
        if peg not in (1, 2, 3):
            raise ValueError(f"peg {peg!r} outside 1..3")
    return state


def apply_move(state: GameState, move: str) -> GameState:
    """Toggle the first occurrence of the move's peg pair.

    When neither peg of the pair occurs, the move has no legal disk to
    transfer onto the pair and the state is returned unchanged, matching
    the fixed point of the corresponding tree automorphism.
    """
    if move not in MOVE_PAIRS:
        raise ValueError(f"move {move!r} not one of a, b, c")
    first, second = MOVE_PAIRS[move]
    for i, peg in enumerate(check_state(state)):
        if peg == first:
            return state[:i] + (second,) + state[i + 1 :]
        if peg == second:
            return state[:i] + (first,) + state[i + 1 :]
    return state


def apply_word(state: GameState, word: str) -> GameState:
    for move in word:
        state = apply_move(state, move)
    return state


def consistency_check(n: int, rng: random.Random | None = None) -> bool:
    """Move semantics agree with the portrait action of the letters.

    Exhaustive over all 3^n states for n <= 8; at least 10^5 sampled states
    otherwise.
    """
    if n < 1:
        raise ValueError("need at least one disk")
    portraits = {m: words.evaluate(m, n) for m in MOVE_PAIRS}
    if n <= 8:
        states = automorphism.level_vertices(n)
    else:
        rng = rng or random.Random(0)
        states = (
            tuple(rng.randint(1, 3) for _ in range(n)) for _ in range(100_000)
        )
    for state in states:
        for move, portrait in portraits.items():
            if apply_move(state, move) != automorphism.apply(portrait, state):
                return False
    return True


def solve(n: int) -> str:
    """A shortest move word from all disks on peg 1 to all on peg 3."""
    if not 1 <= n <= SOLVE_DISK_CAP:
        raise ResourceLimitError(f"disk count {n} outside 1..{SOLVE_DISK_CAP}")
    start = (1,) * n
    goal = (3,) * n
    seen: dict[GameState, str] = {start: ""}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            return seen[state]
        for move in "abc":
            nxt = apply_move(state, move)
            if nxt not in seen:
                seen[nxt] = seen[state] + move
                queue.append(nxt)
    raise AssertionError("goal unreachable; the state graph is connected")


def reachable_states(n: int) -> int:
    """Size of the component of the all-ones state in the move graph."""
    start = (1,) * n
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for move in "abc":
            nxt = apply_move(state, move)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen)

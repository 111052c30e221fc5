"""Run search and replay over pushdown machines.

minimal_accepting_path is a breadth-first search over instantaneous
descriptions with unit step cost, so the first accepting description dequeued
sits at the end of a minimal accepting transition sequence. Exact
(state, position, stack) repeats are deduplicated; ties break by declared
transition order. Stacks are hash-consed so visited-set entries stay O(1)
regardless of stack depth.

accepts() answers membership only. It is a deliberately separate search loop
(and also simulates general machines) so it can serve as an oracle that
shares no decomposition or path-reconstruction code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import PumpingLengthOverflowError
from .normalize import pumping_params
from .pda import NormalizedPda, Pda

STEP_CAP = 1_000_000


@dataclass(frozen=True)
class SearchLimits:
    max_steps: int
    max_stack_height: int


def default_limits(pda: Pda, word) -> SearchLimits:
    """max(10*(|w|+1), 4p when p is computable), capped at one million.

    The limits exist only to guarantee termination on pathological
    epsilon-push loops; they are far above anything a minimal accepting run
    of a well-behaved machine needs.
    """
    bound = 10 * (len(word) + 1)
    if isinstance(pda, NormalizedPda):
        try:
            bound = max(bound, 4 * pumping_params(pda).p)
        except PumpingLengthOverflowError:
            pass
    bound = min(bound, STEP_CAP)
    return SearchLimits(max_steps=bound, max_stack_height=bound)


@dataclass(frozen=True)
class Accepted:
    pass


@dataclass(frozen=True)
class NotAccepted:
    pass


@dataclass(frozen=True)
class LimitExceeded:
    by_steps: bool
    by_height: bool


@dataclass(frozen=True)
class ReplayError:
    """Why a step sequence fails to be an accepting run of the word.

    index is the offending step, or len(steps) for end-of-run failures.
    reason is one of: inapplicable, input-mismatch, not-accepting,
    input-remaining.
    """

    index: int
    reason: str


@dataclass(frozen=True)
class RunPath:
    """An accepting run: the word, the transitions taken, and two aligned
    position-indexed sequences.

    profile[i] is the stack size after i steps (so it has len(steps)+1
    entries); letters_read[i] is how many input letters have been consumed
    after i steps. initial_state/initial_stack pin down the run start so the
    stack contents at any position can be reconstructed from the path alone.
    """

    word: object
    steps: tuple
    profile: tuple[int, ...]
    letters_read: tuple[int, ...]
    initial_state: str
    initial_stack: tuple[str, ...]

    def state_at(self, pos: int) -> str:
        if pos == 0:
            return self.initial_state
        return self.steps[pos - 1].target

    def stack_at(self, pos: int) -> tuple[str, ...]:
        stack = list(self.initial_stack)
        for t in self.steps[:pos]:
            stack.pop()
            stack.extend(t.push)
        return tuple(stack)


class _Node:
    """Interned immutable stack cell; identity equality == stack equality."""

    __slots__ = ("sym", "below", "size")

    def __init__(self, sym, below, size):
        self.sym = sym
        self.below = below
        self.size = size


class _StackPool:
    def __init__(self):
        self._table: dict = {}

    def push(self, below, sym):
        key = (sym, id(below))
        node = self._table.get(key)
        if node is None:
            size = 1 if below is None else below.size + 1
            node = _Node(sym, below, size)
            self._table[key] = node
        return node

    def build(self, symbols):
        node = None
        for sym in symbols:
            node = self.push(node, sym)
        return node


def _by_source(pda: Pda) -> dict:
    adj: dict = {}
    for t in pda.transitions:
        adj.setdefault(t.source, []).append(t)
    return adj


def minimal_accepting_path(pda: NormalizedPda, word, limits: SearchLimits | None = None):
    """Find a minimal accepting run, or prove there is none.

    Returns RunPath on success, NotAccepted when the reachable description
    space is exhausted without truncation, and LimitExceeded when a limit cut
    off part of the space first (so absence was not proven).
    """
    if limits is None:
        limits = default_limits(pda, word)
    pool = _StackPool()
    adj = _by_source(pda)
    n = len(word)
    root = pool.build(pda.initial_stack)
    # entry: (state, pos, node, depth, parent_entry, transition)
    start = (pda.initial_state, 0, root, 0, None, None)
    visited = {(start[0], start[1], start[2])}
    queue = deque([start])
    cut_steps = cut_height = False

    while queue:
        entry = queue.popleft()
        state, pos, node, depth, _, _ = entry
        if state in pda.accept_states and pos == n:
            return _reconstruct(word, entry, pda)
        if node is None:
            continue  # empty stack: no transition can fire
        top = node.sym
        for t in adj.get(state, ()):
            if t.pop != top:
                continue
            npos = pos
            if t.letter is not None:
                if pos >= n or word[pos] != t.letter:
                    continue
                npos = pos + 1
            if t.extra is None:
                child_node = node.below
            else:
                child_node = pool.push(node, t.extra)
            key = (t.target, npos, child_node)
            if key in visited:
                continue
            if depth + 1 > limits.max_steps:
                cut_steps = True
                continue
            if child_node is not None and child_node.size > limits.max_stack_height:
                cut_height = True
                continue
            visited.add(key)
            queue.append((t.target, npos, child_node, depth + 1, entry, t))

    if cut_steps or cut_height:
        return LimitExceeded(by_steps=cut_steps, by_height=cut_height)
    return NotAccepted()


def _reconstruct(word, entry, pda: NormalizedPda) -> RunPath:
    steps = []
    profile = []
    letters = []
    while entry is not None:
        state, pos, node, depth, parent, t = entry
        profile.append(0 if node is None else node.size)
        letters.append(pos)
        if t is not None:
            steps.append(t)
        entry = parent
    steps.reverse()
    profile.reverse()
    letters.reverse()
    return RunPath(
        word=word,
        steps=tuple(steps),
        profile=tuple(profile),
        letters_read=tuple(letters),
        initial_state=pda.initial_state,
        initial_stack=pda.initial_stack,
    )


def accepts(pda: Pda, word, limits: SearchLimits | None = None):
    """Membership verdict only: Accepted, NotAccepted, or LimitExceeded.

    Handles general machines too (pushes of any length), which makes it
    usable as the before/after oracle for normalization equivalence.
    """
    if limits is None:
        limits = default_limits(pda, word)
    pool = _StackPool()
    adj = _by_source(pda)
    n = len(word)
    root = pool.build(pda.initial_stack)
    start = (pda.initial_state, 0, root, 0)
    visited = {(start[0], start[1], start[2])}
    queue = deque([start])
    cut_steps = cut_height = False

    while queue:
        state, pos, node, depth = queue.popleft()
        if state in pda.accept_states and pos == n:
            return Accepted()
        if node is None:
            continue
        top = node.sym
        for t in adj.get(state, ()):
            if t.pop != top:
                continue
            npos = pos
            if t.letter is not None:
                if pos >= n or word[pos] != t.letter:
                    continue
                npos = pos + 1
            child = node.below
            for sym in t.push:
                child = pool.push(child, sym)
            key = (t.target, npos, child)
            if key in visited:
                continue
            if depth + 1 > limits.max_steps:
                cut_steps = True
                continue
            if child is not None and child.size > limits.max_stack_height:
                cut_height = True
                continue
            visited.add(key)
            queue.append((t.target, npos, child, depth + 1))

    if cut_steps or cut_height:
        return LimitExceeded(by_steps=cut_steps, by_height=cut_height)
    return NotAccepted()


def replay(pda: Pda, steps, word):
    """Apply a transition sequence from the initial description.

    Returns the resulting RunPath when it is an accepting run of the word,
    otherwise a ReplayError naming the first offending step index and the
    reason (inapplicable / input-mismatch / not-accepting / input-remaining).
    """
    state = pda.initial_state
    stack = list(pda.initial_stack)
    pos = 0
    n = len(word)
    profile = [len(stack)]
    letters = [0]
    for i, t in enumerate(steps):
        if t.source != state or not stack or stack[-1] != t.pop:
            return ReplayError(i, "inapplicable")
        if t.letter is not None:
            if pos >= n or word[pos] != t.letter:
                return ReplayError(i, "input-mismatch")
            pos += 1
        stack.pop()
        stack.extend(t.push)
        state = t.target
        profile.append(len(stack))
        letters.append(pos)
    if state not in pda.accept_states:
        return ReplayError(len(steps), "not-accepting")
    if pos != n:
        return ReplayError(len(steps), "input-remaining")
    return RunPath(
        word=word,
        steps=tuple(steps),
        profile=tuple(profile),
        letters_read=tuple(letters),
        initial_state=pda.initial_state,
        initial_stack=pda.initial_stack,
    )

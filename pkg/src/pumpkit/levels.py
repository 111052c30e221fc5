"""Stack-profile level analysis.

A stack-size profile of a normalized run moves in unit steps. An N-level is a
triple of positions i < j < k with s_i = s_k, s_j = s_i + N, and the profile
confined to [s_i, s_j] on both flanks [i, j] and [j, k]. The level of a run
(within a window) is the largest such N.

max_level is the fast path: a single left-to-right sweep that tracks, for
every height currently not undercut, the span of positions at that height and
the peak seen inside the span. brute_force_max_level enumerates all (i, j, k)
triples and tests the three conditions directly (vectorized with numpy, but
still the O(n^3) check); it shares no code with the sweep and exists as an
oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TopSymbolMismatchError
from .pda import BLANK
from .run import RunPath


@dataclass(frozen=True)
class LevelTriple:
    i: int
    j: int
    k: int
    n: int


@dataclass(frozen=True)
class Configuration:
    """Control state plus the top `depth` stack symbols, top first.

    Shallower stacks are padded with the blank symbol, so blanks, if any,
    occupy only the trailing (deepest) slots.
    """

    state: str
    top_stack: tuple[str, ...]


@dataclass(frozen=True)
class FullState:
    """State at the last push to a height, the symbol resting there, and the
    state at the first pop back to that height."""

    push_state: str
    top_symbol: str
    pop_state: str


def is_valid_level_triple(profile, t: LevelTriple) -> bool:
    """Literal check of the three level conditions plus index sanity."""
    if not (0 <= t.i < t.j < t.k < len(profile)):
        return False
    if t.n < 1:
        return False
    lo = profile[t.i]
    hi = lo + t.n
    if profile[t.k] != lo or profile[t.j] != hi:
        return False
    return all(lo <= profile[m] <= hi for m in range(t.i, t.k + 1))


def _check_unit_steps(profile) -> None:
    for a, b in zip(profile, profile[1:]):
        if abs(a - b) != 1:
            raise ValueError("profile must move in unit steps")


def max_level(profile, window_end: int) -> tuple[int, LevelTriple | None]:
    """Largest N such that an N-level with k <= window_end exists, plus one witness.

    Single sweep: an "era" opens for height h when the profile steps up onto
    h and closes when it steps below h (heights never undercut stay open to
    the end). Within an era, candidate triples are (first position at h,
    position of the era's peak, last position at h).
    """
    end = min(window_end, len(profile) - 1)
    s = profile[: end + 1]
    _check_unit_steps(s)
    if len(s) < 3:
        return 0, None

    best_n = 0
    best: LevelTriple | None = None
    # era record: [height, first, last, peak, peak_pos]
    eras = [[s[0], 0, 0, s[0], 0]]
    for pos in range(1, len(s)):
        v = s[pos]
        if v > s[pos - 1]:
            eras.append([v, pos, pos, v, pos])
            continue
        h, first, last, peak, peak_pos = eras.pop()
        if peak > h and last > first and peak - h > best_n:
            best_n = peak - h
            best = LevelTriple(first, peak_pos, last, best_n)
        if eras and eras[-1][0] == v:
            # Propagate the closed excursion's peak into the enclosing era:
            # it lies between two of the parent's height-v touches.
            parent = eras[-1]
            parent[2] = pos
            if peak > parent[3]:
                parent[3] = peak
                parent[4] = peak_pos
        else:
            # First touch of height v in this segment, reached from above:
            # the closed excursion predates it, so its peak must not count.
            eras.append([v, pos, pos, v, pos])
    # Eras still open at the end close with their recorded last touch. Their
    # peaks do not propagate upward: an enclosing era's last touch predates
    # any child that survived to the end, so such peaks sit past its k.
    while eras:
        h, first, last, peak, peak_pos = eras.pop()
        if peak > h and last > first and peak - h > best_n:
            best_n = peak - h
            best = LevelTriple(first, peak_pos, last, best_n)
    return best_n, best


def brute_force_max_level(profile, window_end: int) -> tuple[int, LevelTriple | None]:
    """Oracle: enumerate every (i, j, k) triple and test the level conditions.

    O(n^3) space and time over the windowed profile; meant for desk-scale
    cross-checking of max_level, not production use. Returns the
    lexicographically first maximal witness.
    """
    end = min(window_end, len(profile) - 1)
    if end < 2:
        return 0, None
    values = list(profile[: end + 1])
    dtype = np.int16 if max(abs(v) for v in values) < 32000 else np.int64
    s = np.asarray(values, dtype=dtype)
    L = len(s)

    # Range extrema matrices: fmax[a, b] = max(s[a..b]) for a <= b.
    tile = np.broadcast_to(s, (L, L))
    below_diag = np.tril(np.ones((L, L), dtype=bool), -1)
    fmax = np.maximum.accumulate(np.where(below_diag, np.iinfo(dtype).min, tile), axis=1)
    fmin = np.minimum.accumulate(np.where(below_diag, np.iinfo(dtype).max, tile), axis=1)

    idx = np.arange(L)
    before = idx[:, None] < idx[None, :]
    # [i, j] flank: inside [s_i, s_j], with s_j above s_i and i < j.
    flank_up = before & (s[None, :] > s[:, None]) & (fmin >= s[:, None]) & (fmax <= s[None, :])
    # [j, k] flank upper bound: peak at most s_j, with j < k.
    flank_down = before & (fmax <= s[:, None])
    valid = (
        flank_up[:, :, None]
        & flank_down[None, :, :]
        & (fmin[None, :, :] >= s[:, None, None])
        & (s[:, None, None] == s[None, None, :])
    )
    if not valid.any():
        return 0, None
    n_grid = s[None, :, None].astype(dtype) - s[:, None, None]
    scores = np.where(valid, n_grid, 0)
    best = int(scores.max())
    i, j, k = (int(x) for x in np.argwhere(scores == best)[0])
    return best, LevelTriple(i, j, k, best)


def last_push(profile, triple: LevelTriple, h: int) -> int:
    """Largest position y <= j with s_y = h; the last time height h was
    (re)established before the peak."""
    if not (profile[triple.i] <= h <= profile[triple.j]):
        raise ValueError(f"height {h} outside the triple's range")
    for y in range(triple.j, triple.i - 1, -1):
        if profile[y] == h:
            return y
    raise ValueError(f"height {h} does not occur on the rising flank")


def first_pop(profile, triple: LevelTriple, h: int) -> int:
    """Smallest position y >= j with s_y = h; the first return to height h
    after the peak."""
    if not (profile[triple.i] <= h <= profile[triple.j]):
        raise ValueError(f"height {h} outside the triple's range")
    for y in range(triple.j, triple.k + 1):
        if profile[y] == h:
            return y
    raise ValueError(f"height {h} does not occur on the falling flank")


def configuration_at(path: RunPath, pos: int, depth: int) -> Configuration:
    """Observable configuration: state plus the top `depth` symbols at a
    path position, blank-padded when the stack is shallower."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    stack = path.stack_at(pos)
    top_first = tuple(reversed(stack[-depth:] if depth else ()))
    if len(top_first) < depth:
        top_first = top_first + (BLANK,) * (depth - len(top_first))
    return Configuration(path.state_at(pos), top_first)


def configurations_up_to(path: RunPath, last_pos: int, depth: int) -> list[Configuration]:
    """Configurations at positions 0..last_pos in one pass over the steps."""
    out = []
    stack = list(path.initial_stack)
    for pos in range(last_pos + 1):
        if pos > 0:
            t = path.steps[pos - 1]
            stack.pop()
            stack.extend(t.push)
        top_first = tuple(reversed(stack[-depth:] if depth else ()))
        if len(top_first) < depth:
            top_first = top_first + (BLANK,) * (depth - len(top_first))
        out.append(Configuration(path.state_at(pos), top_first))
    return out


def full_state(path: RunPath, triple: LevelTriple, h: int) -> FullState:
    """Full state of a height within a level triple.

    The symbol at height h when it was last established on the rising flank
    provably still rests there at the first return on the falling flank; the
    function checks this and raises TopSymbolMismatchError on corrupted
    paths, since a mismatch falsifies the construction the caller is running.
    """
    lp = last_push(path.profile, triple, h)
    fp = first_pop(path.profile, triple, h)
    top_lp = path.stack_at(lp)[-1]
    top_fp = path.stack_at(fp)[-1]
    if top_lp != top_fp:
        raise TopSymbolMismatchError(
            f"height {h}: top symbol {top_lp!r} at position {lp} but {top_fp!r} at position {fp}"
        )
    return FullState(path.state_at(lp), top_lp, path.state_at(fp))


def extract_sublevel(profile, triple: LevelTriple, target: int) -> LevelTriple:
    """Shrink a level triple to a `target`-level around the same peak.

    i' is the last position at height s_j - target before the peak, k' the
    first one after; both exist inside the original flanks because the
    profile moves in unit steps.
    """
    if not (1 <= target <= triple.n):
        raise ValueError("target must be between 1 and the triple's level")
    want = profile[triple.j] - target
    i2 = k2 = None
    for y in range(triple.j, triple.i - 1, -1):
        if profile[y] == want:
            i2 = y
            break
    for y in range(triple.j, triple.k + 1):
        if profile[y] == want:
            k2 = y
            break
    if i2 is None or k2 is None:
        raise ValueError("target height does not occur on both flanks")
    return LevelTriple(i2, triple.j, k2, target)

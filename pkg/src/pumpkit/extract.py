"""Constructive pumping decompositions from minimal accepting runs.

The dispatch mirrors the construction the toolkit mechanizes: find a minimal
accepting run, measure its level l within the mode's window, then

- l >= p': shrink the level witness to a p'-level and cut the word at the
  last-push/first-pop positions of two heights with equal full states
  (case 2);
- l < p': find two path positions with equal depth-l configurations and pump
  the letters between them (case 1).

Every candidate is defensively replay-verified for a small set of pump
counts before being returned; failing candidates are skipped and recorded,
because a repeat observed through a depth-limited window is not always a
sound pump site.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    ConstructionFalsifiedError,
    MinimalityViolationError,
    NoRepeatFoundError,
    NotAcceptedError,
    NoWitnessError,
    SearchLimitError,
    StrictPreconditionError,
)
from .levels import (
    LevelTriple,
    configurations_up_to,
    extract_sublevel,
    first_pop,
    full_state,
    last_push,
    max_level,
)
from .normalize import PumpingParams, pumping_params
from .pda import NormalizedPda
from .run import LimitExceeded, NotAccepted, RunPath, SearchLimits, minimal_accepting_path
from .verify import verify_by_replay


class ExtractionMode(enum.Enum):
    STRICT = "strict"
    BEST_EFFORT = "best-effort"


@dataclass(frozen=True)
class Case1Witness:
    i: int
    j: int
    depth: int


@dataclass(frozen=True)
class Case2Witness:
    triple: LevelTriple
    g: int
    h: int
    lp_g: int
    lp_h: int
    fp_h: int
    fp_g: int


@dataclass(frozen=True)
class Decomposition:
    u: object
    v: object
    x: object
    y: object
    z: object
    case: str  # "case1" | "case2"
    witness: object
    params: PumpingParams

    @property
    def boundaries(self) -> tuple[int, int, int, int]:
        b1 = len(self.u)
        b2 = b1 + len(self.v)
        b3 = b2 + len(self.x)
        b4 = b3 + len(self.y)
        return (b1, b2, b3, b4)


@dataclass(frozen=True)
class Fallback:
    case: str
    candidate: tuple
    reason: str


@dataclass(frozen=True)
class Diagnostics:
    mode: str
    path_length: int
    profile: tuple[int, ...]
    level: int
    level_witness: LevelTriple | None
    window_end: int
    whole_path_level: int
    p_prime: int
    case: str | None
    candidates_tried: int
    config_pairs_available: int
    full_state_pairs_available: int
    fallbacks: tuple[Fallback, ...] = ()


@dataclass(frozen=True)
class ExtractionResult:
    decomposition: Decomposition
    diagnostics: Diagnostics
    path: RunPath


def _empty_like(word):
    return word[0:0]


def _build_case1(path: RunPath, params: PumpingParams, i: int, j: int, depth: int) -> Decomposition:
    w = path.word
    a = path.letters_read[i]
    b = path.letters_read[j]
    empty = _empty_like(w)
    return Decomposition(
        u=w[:a],
        v=w[a:b],
        x=w[b:],
        y=empty,
        z=empty,
        case="case1",
        witness=Case1Witness(i, j, depth),
        params=params,
    )


def _build_case2(path: RunPath, params: PumpingParams, triple: LevelTriple, g: int, h: int) -> Decomposition:
    profile = path.profile
    lp_g = last_push(profile, triple, g)
    lp_h = last_push(profile, triple, h)
    fp_h = first_pop(profile, triple, h)
    fp_g = first_pop(profile, triple, g)
    w = path.word
    a, b, c, d = (path.letters_read[p] for p in (lp_g, lp_h, fp_h, fp_g))
    return Decomposition(
        u=w[:a],
        v=w[a:b],
        x=w[b:c],
        y=w[c:d],
        z=w[d:],
        case="case2",
        witness=Case2Witness(triple, g, h, lp_g, lp_h, fp_h, fp_g),
        params=params,
    )


def _case1_pairs(path: RunPath, window_end: int, depth: int):
    """(i, j) pairs with equal depth-limited configurations, in (i, j) order."""
    configs = configurations_up_to(path, window_end, depth)
    seen: dict = {}
    for pos, cfg in enumerate(configs):
        seen.setdefault(cfg, []).append(pos)
    pairs = []
    for positions in seen.values():
        for a in range(len(positions)):
            for b in range(a + 1, len(positions)):
                pairs.append((positions[a], positions[b]))
    pairs.sort()
    return pairs


def _case2_pairs(path: RunPath, triple: LevelTriple):
    """(g, h) height pairs with equal full states, g then h ascending."""
    profile = path.profile
    lo = profile[triple.i]
    hi = profile[triple.j]
    states = {h: full_state(path, triple, h) for h in range(lo, hi + 1)}
    pairs = []
    for g in range(lo, hi + 1):
        for h in range(g + 1, hi + 1):
            if states[g] == states[h]:
                pairs.append((g, h))
    return pairs


def case1_decompose(
    path: RunPath,
    level: int,
    params: PumpingParams,
    window_end: int | None = None,
) -> Decomposition:
    """First repeated depth-`level` configuration pair, pumped between.

    Raises NoRepeatFoundError when the window holds no repeat, and
    MinimalityViolationError when the first repeat consumed no letters (a
    minimal run should never revisit a configuration for free).
    """
    if window_end is None:
        window_end = min(params.p, len(path.steps))
    pairs = _case1_pairs(path, window_end, level)
    if not pairs:
        raise NoRepeatFoundError(
            f"no repeated depth-{level} configuration in positions 0..{window_end}"
        )
    i, j = pairs[0]
    if path.letters_read[i] == path.letters_read[j]:
        raise MinimalityViolationError(
            f"positions {i} and {j} repeat a configuration without reading input"
        )
    return _build_case1(path, params, i, j, level)


def case2_decompose(path: RunPath, triple: LevelTriple, params: PumpingParams) -> Decomposition:
    """First pair of heights in the triple with equal full states.

    Raises NoRepeatFoundError when all full states are distinct, and
    MinimalityViolationError when the cut would pump zero letters.
    """
    pairs = _case2_pairs(path, triple)
    if not pairs:
        raise NoRepeatFoundError("no repeated full state among the triple's heights")
    g, h = pairs[0]
    d = _build_case2(path, params, triple, g, h)
    if len(d.v) + len(d.y) == 0:
        raise MinimalityViolationError(
            f"heights {g} and {h} repeat a full state without reading input"
        )
    return d


def extract(
    pda: NormalizedPda,
    word,
    mode: ExtractionMode = ExtractionMode.STRICT,
    limits: SearchLimits | None = None,
    pumps_checked: tuple[int, ...] = (0, 2),
) -> ExtractionResult:
    """Decompose an accepted word into u, v, x, y, z ready for pumping.

    Strict mode requires |word| > p and scans repeats only inside the first
    p+1 path positions (level window k <= p); best-effort scans the whole
    run and falls back from case 2 to case 1 before giving up. Candidates
    that fail the internal replay check for `pumps_checked` are skipped and
    the skip recorded in the diagnostics.
    """
    params = pumping_params(pda)
    outcome = minimal_accepting_path(pda, word, limits)
    if isinstance(outcome, NotAccepted):
        raise NotAcceptedError(f"word of length {len(word)} is not accepted")
    if isinstance(outcome, LimitExceeded):
        raise SearchLimitError(outcome.by_steps, outcome.by_height)
    path = outcome

    strict = mode is ExtractionMode.STRICT
    if strict and len(word) <= params.p:
        raise StrictPreconditionError(len(word), params.p)

    steps_total = len(path.steps)
    window_end = min(params.p, steps_total) if strict else steps_total
    level, witness = max_level(path.profile, window_end)
    whole_level = level if window_end == steps_total else max_level(path.profile, steps_total)[0]

    fallbacks: list[Fallback] = []
    tried = 0
    config_pairs = 0
    fs_pairs = 0

    def attempt(case: str, candidate: tuple, build) -> Decomposition | None:
        nonlocal tried
        tried += 1
        d = build()
        if len(d.v) + len(d.y) == 0:
            fallbacks.append(Fallback(case, candidate, "empty-pump"))
            return None
        for n in pumps_checked:
            if not verify_by_replay(pda, path, d, n):
                fallbacks.append(Fallback(case, candidate, f"replay-failed-n{n}"))
                return None
        return d

    def diag(case: str | None) -> Diagnostics:
        return Diagnostics(
            mode=mode.value,
            path_length=steps_total,
            profile=path.profile,
            level=level,
            level_witness=witness,
            window_end=window_end,
            whole_path_level=whole_level,
            p_prime=params.p_prime,
            case=case,
            candidates_tried=tried,
            config_pairs_available=config_pairs,
            full_state_pairs_available=fs_pairs,
            fallbacks=tuple(fallbacks),
        )

    # Case 2 first when the level is rich enough (or on any best-effort
    # triple at all); case 1 otherwise, over the mode's window.
    case2_triples: list[LevelTriple] = []
    if witness is not None:
        if level >= params.p_prime:
            case2_triples.append(extract_sublevel(path.profile, witness, params.p_prime))
        elif not strict:
            case2_triples.append(witness)

    for triple in case2_triples:
        pairs = _case2_pairs(path, triple)
        fs_pairs += len(pairs)
        for g, h in pairs:
            d = attempt("case2", (g, h), lambda: _build_case2(path, params, triple, g, h))
            if d is not None:
                return ExtractionResult(d, diag("case2"), path)

    if level < params.p_prime or not strict:
        pairs = _case1_pairs(path, window_end, level)
        config_pairs = len(pairs)
        for i, j in pairs:
            if path.letters_read[i] == path.letters_read[j]:
                fallbacks.append(Fallback("case1", (i, j), "empty-pump"))
                tried += 1
                continue
            d = attempt("case1", (i, j), lambda: _build_case1(path, params, i, j, level))
            if d is not None:
                return ExtractionResult(d, diag("case1"), path)

    if strict:
        # The construction guarantees a usable repeat in strict mode; running
        # out of candidates falsifies it rather than merely failing.
        raise ConstructionFalsifiedError(
            f"strict extraction exhausted {tried} candidates (level {level}, p'={params.p_prime})"
        )
    raise NoWitnessError(
        "no usable repeated configuration or full state in the run",
        diagnostics=diag(None),
    )

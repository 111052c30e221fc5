"""Pushdown automaton core: machine types, single-step semantics, validation.

Conventions used throughout the toolkit:

- Stacks are written deepest-first; the top of the stack is the LAST element.
- Every transition pops exactly one symbol. General transitions may push any
  sequence (deepest-first, so push[0] lands deepest); normalized transitions
  either push nothing (net -1) or restore the popped symbol and add one more
  (net +1).
- A reserved bottom marker sits deepest in the initial stack. It is an
  ordinary member of the stack alphabet and may be popped; machines that need
  an emptiness check pop it explicitly on the way to an accept state.
- A reserved blank symbol exists outside the stack alphabet. It never appears
  on stacks; level analysis uses it to pad shallow configurations.
- Acceptance is by final state with the entire input consumed. Leftover stack
  is fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InapplicableTransitionError

BOTTOM = "⊥"  # bottom-of-stack marker
BLANK = "␣"   # padding symbol, never a member of the stack alphabet


@dataclass(frozen=True)
class GeneralTransition:
    """Pop one symbol, push any sequence. letter=None means an epsilon move."""

    source: str
    letter: str | None
    pop: str
    push: tuple[str, ...]
    target: str

    def __post_init__(self):
        object.__setattr__(self, "push", tuple(self.push))


@dataclass(frozen=True)
class NormalizedTransition:
    """Pop one symbol and either push nothing or restore it plus one extra.

    extra=None encodes the pop-only shape. Otherwise the pushed sequence is
    (pop, extra): the popped symbol goes back and extra lands on top.
    """

    source: str
    letter: str | None
    pop: str
    extra: str | None
    target: str

    @property
    def push(self) -> tuple[str, ...]:
        if self.extra is None:
            return ()
        return (self.pop, self.extra)


Transition = GeneralTransition | NormalizedTransition


def stack_effect(t: Transition) -> int:
    """Net change in stack size when t fires."""
    return len(t.push) - 1


@dataclass(frozen=True)
class GeneralPda:
    states: frozenset[str]
    input_alphabet: frozenset[str]
    stack_alphabet: frozenset[str]
    initial_state: str
    initial_stack: tuple[str, ...]
    accept_states: frozenset[str]
    transitions: tuple[GeneralTransition, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))
        object.__setattr__(self, "stack_alphabet", frozenset(self.stack_alphabet))
        object.__setattr__(self, "initial_stack", tuple(self.initial_stack))
        object.__setattr__(self, "accept_states", frozenset(self.accept_states))
        object.__setattr__(self, "transitions", tuple(self.transitions))


@dataclass(frozen=True)
class NormalizedPda:
    """A machine whose transitions all have the pop-only or push-one shape.

    Consecutive stack sizes along any run differ by exactly 1, which is what
    the level analysis relies on. The shape is checked by validate(), not
    enforced by construction.
    """

    states: frozenset[str]
    input_alphabet: frozenset[str]
    stack_alphabet: frozenset[str]
    initial_state: str
    initial_stack: tuple[str, ...]
    accept_states: frozenset[str]
    transitions: tuple[NormalizedTransition, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))
        object.__setattr__(self, "stack_alphabet", frozenset(self.stack_alphabet))
        object.__setattr__(self, "initial_stack", tuple(self.initial_stack))
        object.__setattr__(self, "accept_states", frozenset(self.accept_states))
        object.__setattr__(self, "transitions", tuple(self.transitions))


Pda = GeneralPda | NormalizedPda


@dataclass(frozen=True)
class InstantaneousDescription:
    """A point in a run: control state, input cursor, full stack (top last)."""

    state: str
    pos: int
    stack: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "stack", tuple(self.stack))


def initial_description(pda: Pda) -> InstantaneousDescription:
    return InstantaneousDescription(pda.initial_state, 0, pda.initial_stack)


def is_accepting(pda: Pda, desc: InstantaneousDescription, word_length: int) -> bool:
    return desc.state in pda.accept_states and desc.pos == word_length


def step(
    pda: Pda,
    desc: InstantaneousDescription,
    t: Transition,
    word=None,
) -> InstantaneousDescription:
    """Apply one transition to a description.

    Raises InapplicableTransitionError when any precondition fails: wrong
    source state, empty stack, top symbol differs from t.pop, or (when the
    word is supplied) an input letter that does not match the cursor.
    """
    if t.source != desc.state:
        raise InapplicableTransitionError("source state mismatch")
    if not desc.stack:
        raise InapplicableTransitionError("empty stack")
    if desc.stack[-1] != t.pop:
        raise InapplicableTransitionError("top symbol mismatch")
    pos = desc.pos
    if t.letter is not None:
        if word is not None:
            if pos >= len(word):
                raise InapplicableTransitionError("input exhausted")
            if word[pos] != t.letter:
                raise InapplicableTransitionError("input letter mismatch")
        pos += 1
    return InstantaneousDescription(t.target, pos, desc.stack[:-1] + t.push)


def is_star_form(pda: Pda) -> bool:
    """True iff every transition pops one symbol and pushes either nothing
    or exactly [popped, extra]."""
    for t in pda.transitions:
        push = t.push
        if len(push) == 0:
            continue
        if len(push) == 2 and push[0] == t.pop:
            continue
        return False
    return True


@dataclass(frozen=True)
class Issue:
    severity: str  # "error" | "warning"
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...] = ()

    @property
    def errors(self) -> tuple[Issue, ...]:
        return tuple(i for i in self.issues if i.severity == "error")

    @property
    def warnings(self) -> tuple[Issue, ...]:
        return tuple(i for i in self.issues if i.severity == "warning")

    @property
    def ok(self) -> bool:
        return not self.errors


def validate(pda: Pda) -> ValidationReport:
    """Check the structural invariants of a machine.

    An empty error list means well-formed. Warnings flag shapes that are
    legal but hazardous, currently only transitions that pop the bottom
    marker and push a replacement sequence not rooted in it (their expansion
    can strand the machine on a momentarily empty stack).
    """
    issues: list[Issue] = []

    def err(code: str, message: str):
        issues.append(Issue("error", code, message))

    if BLANK in pda.stack_alphabet:
        err("blank-in-alphabet", f"the padding symbol {BLANK!r} must stay outside the stack alphabet")
    if BLANK in pda.input_alphabet:
        err("blank-in-alphabet", f"the padding symbol {BLANK!r} must stay outside the input alphabet")
    if pda.initial_state not in pda.states:
        err("undeclared-state", f"initial state {pda.initial_state!r} is not declared")
    for q in sorted(pda.accept_states):
        if q not in pda.states:
            err("undeclared-state", f"accept state {q!r} is not declared")
    if not pda.initial_stack:
        err("bad-initial-stack", "initial stack must not be empty")
    elif pda.initial_stack[0] != BOTTOM:
        err("bad-initial-stack", f"the deepest initial symbol must be the bottom marker {BOTTOM!r}")
    for sym in pda.initial_stack:
        if sym not in pda.stack_alphabet:
            err("undeclared-stack-symbol", f"initial stack symbol {sym!r} is not declared")

    normalized = isinstance(pda, NormalizedPda)
    for n, t in enumerate(pda.transitions):
        where = f"transition #{n}"
        if t.source not in pda.states:
            err("undeclared-state", f"{where}: source {t.source!r} is not declared")
        if t.target not in pda.states:
            err("undeclared-state", f"{where}: target {t.target!r} is not declared")
        if t.letter is not None and t.letter not in pda.input_alphabet:
            err("undeclared-input-symbol", f"{where}: letter {t.letter!r} is not declared")
        if t.pop not in pda.stack_alphabet:
            err("undeclared-stack-symbol", f"{where}: pop symbol {t.pop!r} is not declared")
        push = t.push
        for sym in push:
            if sym not in pda.stack_alphabet:
                err("undeclared-stack-symbol", f"{where}: push symbol {sym!r} is not declared")
        if normalized and not (len(push) == 0 or (len(push) == 2 and push[0] == t.pop)):
            err(
                "star-violation",
                f"{where}: normalized transitions must push nothing or [popped, extra], got {list(push)}",
            )
        if t.pop == BOTTOM and push and push[0] != BOTTOM:
            issues.append(
                Issue(
                    "warning",
                    "bottom-loss",
                    f"{where}: pops the bottom marker and pushes a sequence not rooted in it",
                )
            )

    return ValidationReport(tuple(issues))

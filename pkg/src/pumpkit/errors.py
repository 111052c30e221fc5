"""Exception types shared across the toolkit."""


class PumpkitError(Exception):
    """Base class for all toolkit errors."""


class InapplicableTransitionError(PumpkitError):
    """A transition was applied to a description that does not satisfy its preconditions."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class PumpingLengthOverflowError(PumpkitError):
    """The pumping length would exceed the configured representable range.

    Carries p' and the would-be exponent so callers can report how far out
    of range the machine is.
    """

    def __init__(self, p_prime: int, base: int, exponent: int, bit_limit: int):
        self.p_prime = p_prime
        self.base = base
        self.exponent = exponent
        self.bit_limit = bit_limit
        super().__init__(
            f"pumping length {base}^{exponent} scaled by the state count exceeds "
            f"{bit_limit} bits (p'={p_prime})"
        )


class FormatError(PumpkitError):
    """A machine document failed structural parsing or validation."""


class ExtractionError(PumpkitError):
    """Base class for decomposition extraction failures."""


class NotAcceptedError(ExtractionError):
    """The word is provably not accepted, so no decomposition exists."""


class StrictPreconditionError(ExtractionError):
    """Strict mode requires the word to be longer than the pumping length."""

    def __init__(self, word_length: int, p: int):
        self.word_length = word_length
        self.p = p
        super().__init__(f"strict mode needs |w| > p but |w|={word_length} and p={p}")


class SearchLimitError(ExtractionError):
    """The run search hit a step or stack-height limit before settling membership."""

    def __init__(self, by_steps: bool, by_height: bool):
        self.by_steps = by_steps
        self.by_height = by_height
        which = ", ".join(
            name for name, hit in (("max_steps", by_steps), ("max_stack_height", by_height)) if hit
        )
        super().__init__(f"search truncated by {which or 'a limit'}")


class NoWitnessError(ExtractionError):
    """Best-effort extraction found no usable repetition in the run."""

    def __init__(self, message: str, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class MinimalityViolationError(ExtractionError):
    """A repetition that should be impossible on a minimal run was encountered.

    Returned instead of a decomposition whose pumped block would be empty.
    """


class NoRepeatFoundError(ExtractionError):
    """The scanned window contains no repeated configuration or full state."""


class TopSymbolMismatchError(PumpkitError):
    """The two stack tops tied to a full state disagree.

    On consistent runs they provably coincide; seeing this means the run path
    or its profile was corrupted, and extraction must abort.
    """


class ConstructionFalsifiedError(PumpkitError):
    """Every strict-mode candidate failed replay verification.

    Must never happen if the underlying construction is sound; surfaced loudly
    instead of being folded into a normal failure.
    """

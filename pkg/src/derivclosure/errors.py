"""Exception hierarchy shared by all modules."""


class WordError(Exception):
    """Base class for every error raised by this package."""


class AlphabetMismatch(WordError, ValueError):
    pass


class NotAFactor(WordError, ValueError):
    """The word was not found in the scanned prefix."""


class InsufficientData(WordError, RuntimeError):
    """The scan budget ran out before the requested data was determined."""


class NotPrimitive(WordError, ValueError):
    pass


class DecompositionError(WordError, RuntimeError):
    """An image could not be cut into known return words.

    For a primitive substitution and a genuine prefix this cannot happen;
    seeing it means the return set was truncated or there is a bug.
    """

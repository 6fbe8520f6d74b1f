"""Exceptions shared across the package."""


class BraidError(Exception):
    """Base class for all errors raised by bandbraid."""


class ParseError(BraidError):
    """A word or factor string does not conform to the grammar.

    Carries the character position of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotCanonicalFactorError(BraidError):
    """A permutation table or cycle family is not a canonical factor."""


class CapExceededError(BraidError):
    """A configured iteration or element budget was exhausted.

    The computation is *undecided*, which is distinct from a negative
    answer; callers must not coerce this to False.
    """

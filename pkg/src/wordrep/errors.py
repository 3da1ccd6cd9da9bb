"""Exception hierarchy for the word-representation toolkit."""


class WordRepError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyWord(WordRepError):
    pass


class LetterAbsent(WordRepError):
    pass


class SameLetter(WordRepError):
    pass


class NotUniform(WordRepError):
    pass


class IndexOutOfRange(WordRepError):
    pass


class PositionOutOfRange(WordRepError):
    pass


class LengthOutOfRange(WordRepError):
    pass


class InvalidGraph(WordRepError):
    pass


class NotConnected(WordRepError):
    pass


class DoesNotRepresent(WordRepError):
    pass


class NotSquareFree(WordRepError):
    pass


class CompleteGraph(WordRepError):
    pass


class CompleteGraphUnbounded(WordRepError):
    pass


class BlocksNotDistinct(WordRepError):
    pass


class NoEdgedComponent(WordRepError):
    pass


class OverlappingAlphabets(WordRepError):
    pass


class ComponentNotRepresented(WordRepError):
    pass


class ComponentComplete(WordRepError):
    pass


class NoSquareFreeRepresentation(WordRepError):
    pass


class BudgetExceeded(WordRepError):
    pass


class CapExceeded(WordRepError):
    pass

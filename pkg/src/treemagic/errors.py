"""Exception hierarchy shared across the package."""


class TreeMagicError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TreeMagicError):
    """Edge-list input could not be parsed into a valid tree.

    Carries the 1-based line number and raw line when the problem is
    attributable to a specific input line.
    """

    def __init__(self, message: str, line_no: int | None = None, line: str | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
        self.line = line


class EmptyInputError(ParseError):
    """Input contained no vertices or edges after comments and blanks."""


class MalformedLineError(ParseError):
    """A non-comment line did not contain one or two whitespace-separated tokens."""


class SelfLoopError(ParseError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(ParseError):
    """The same unordered vertex pair appears on more than one line."""


class CycleDetectedError(ParseError):
    """An edge closes a cycle; the input is not a tree."""


class DisconnectedError(ParseError):
    """The input describes more than one connected component."""


class UnknownVertexError(TreeMagicError):
    """A vertex identifier is not declared in the tree."""


class DegenerateTreeError(TreeMagicError):
    """The tree has no edges (single vertex), so the operation is undefined."""


class NotInSpectrumError(TreeMagicError):
    """The requested modulus is not in the tree's integer-magic spectrum."""


class InternalError(TreeMagicError):
    """An invariant the implementation guarantees was violated; indicates a bug."""


class LabelEdgeMismatchError(TreeMagicError):
    """A labeling's edge set does not match the tree's edge set."""


class NTooLargeError(TreeMagicError):
    """Exhaustive tree enumeration was requested beyond the supported size."""


class SearchBudgetExceededError(TreeMagicError):
    """The brute-force search space exceeds the configured state cap."""

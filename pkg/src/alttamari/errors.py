"""Exception types shared across the library."""


class AltTamariError(Exception):
    """Base class for all library errors."""


# --- Dyck words ---

class BadAlphabet(AltTamariError):
    """Input word contains a letter outside the accepted alphabet."""


class NonDyckWord(AltTamariError):
    """Word is unbalanced or violates the prefix condition."""


class SizeMismatch(AltTamariError):
    """Two objects that must share a size do not."""


class SizeTooLarge(AltTamariError):
    """Requested size exceeds the configured cap."""


class IndexOutOfRange(AltTamariError):
    """Step / leaf / edge index outside the valid range."""


class SpanOutOfRange(AltTamariError):
    """Span does not fit inside the path."""


# --- posets ---

class CycleDetected(AltTamariError):
    """Cover relation contains a directed cycle."""


class DuplicateElement(AltTamariError):
    """Element list contains a repeated key."""


class UnknownElement(AltTamariError):
    """Element key not present in the poset."""


class NotComparable(AltTamariError):
    """Interval query on an incomparable pair."""


# --- trees ---

class LeafOutOfRange(AltTamariError):
    """Leaf index outside 0..size."""


class RootEdgeForbidden(AltTamariError):
    """Plugging into the root edge is not allowed."""


class InvalidInterval(AltTamariError):
    """Pair of trees does not form a valid interval."""


# --- rotations and bijections ---

class NotAValley(AltTamariError):
    """Rotation requested at an up step not preceded by a down step."""


class NotACovering(AltTamariError):
    """Pair is not a covering relation."""


class NotLeft(AltTamariError):
    """Pair is not a left interval."""


class NotRight(AltTamariError):
    """Pair is not a right interval."""


class NotLinear(AltTamariError):
    """Pair is not a linear interval."""


class HeightOutOfRange(AltTamariError):
    """Height parameter outside 2 <= k < n."""


class OrderExceeded(AltTamariError):
    """Requested coefficient beyond the series truncation order."""

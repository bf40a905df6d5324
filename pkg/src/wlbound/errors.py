"""Exception types raised by loaders, refinement kernels and benchmark ops."""


class WlboundError(Exception):
    """Base class for all package errors."""


class InvalidGraph(WlboundError):
    """A Graph invariant is violated (self-loop, duplicate edge, bad index...)."""


class InvalidGraph6(WlboundError):
    """Malformed graph6 record; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class MissingFile(WlboundError):
    """A required dataset file does not exist."""


class IndexOutOfRange(WlboundError):
    """A dataset file references a node/graph index outside the declared range."""


class RaggedAttributeRow(WlboundError):
    """An attribute file row has the wrong arity."""


class SchemaViolation(WlboundError):
    """JSONL record violates the wlbound-v1 schema; names line and field."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class InitLengthMismatch(WlboundError):
    """Initial color vector length does not equal node_count."""


class TupleBudgetExceeded(WlboundError):
    """node_count**k exceeds the configured k-WL tuple budget."""

    def __init__(self, k: int, node_count: int, budget: int):
        self.k = k
        self.node_count = node_count
        self.budget = budget
        super().__init__(
            f"{node_count}^{k} = {node_count ** k} tuples exceeds budget {budget}"
        )


class BudgetExceeded(WlboundError):
    """An enumeration or class check exceeded its configured budget."""


class DimExceedsOrder(WlboundError):
    """Positional encoding dimension larger than the graph order."""


class LayerNegative(WlboundError):
    """Requested a negative refinement layer."""


class TargetMismatch(WlboundError):
    """Dataset targets do not match the task shape required by an evaluation."""


class OrderOutOfRange(WlboundError):
    """Requested graph order outside the supported generation range."""

"""Exception hierarchy shared by every module of the workbench."""


class LPError(Exception):
    """Base class for all workbench errors."""


class ParseError(LPError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SafetyError(LPError):
    def __init__(self, variable, rule):
        super().__init__(f"unsafe variable {variable} in rule: {rule}")
        self.variable = variable
        self.rule = rule


class CapExceededError(LPError):
    """An exhaustive search would exceed its configured size cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class GroundingBudgetError(CapExceededError):
    pass


class UnknownAtomError(LPError):
    pass


class PreconditionError(LPError):
    """A semantics was asked for on a program outside its domain."""


class NotDefiniteError(PreconditionError):
    def __init__(self, literal, rule):
        super().__init__(f"program is not definite: {literal} in rule {rule}")
        self.literal = literal
        self.rule = rule


class NotStratifiedError(PreconditionError):
    def __init__(self, cycle):
        super().__init__(
            "program is not stratified: cycle through negation "
            + " -> ".join(cycle)
        )
        self.cycle = list(cycle)


class FixpointDivergence(LPError):
    """A fixpoint loop ran past its proven iteration bound (implementation bug)."""

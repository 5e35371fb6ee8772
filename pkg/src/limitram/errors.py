"""Exception hierarchy shared by every layer of the package."""


class LimitramError(Exception):
    """Base class for all errors raised by limitram."""


class ParseError(LimitramError):
    """Polynomial text that does not follow the grammar."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NonHomogeneousError(ParseError):
    pass


class ValidationError(LimitramError):
    """A family description violating a structural invariant."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class PrecisionExhausted(LimitramError):
    """More t-adic precision was needed than the jets carry."""

    def __init__(self, message, lower_bound=None):
        self.lower_bound = lower_bound
        super().__init__(message)


class LinearDependenceError(LimitramError):
    pass


class PreconditionError(LimitramError):
    pass


class IterationBoundExceeded(LimitramError):
    pass


class IdentityCheckError(LimitramError):
    """A degree identity failed; carries the partial report."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)

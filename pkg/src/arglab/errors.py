"""Exception hierarchy shared across the package."""


class ArgumentationError(Exception):
    pass


class ParseError(ArgumentationError):
    """Malformed input text. ``line`` is the 1-based line number, if known."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        self.message = message
        super().__init__(self._render())

    def _render(self):
        where = ""
        if self.source is not None:
            where += str(self.source)
        if self.line is not None:
            where += f":{self.line}" if where else f"line {self.line}"
        return f"{where}: {self.message}" if where else self.message


class UndeclaredArgument(ParseError):
    def __init__(self, arg, line=None, source=None):
        self.arg = arg
        super().__init__(f"attack references undeclared argument {arg!r}", line, source)


class DuplicateArgument(ParseError):
    def __init__(self, arg, line=None, source=None):
        self.arg = arg
        super().__init__(f"argument {arg!r} declared twice", line, source)


class ConflictingContrary(ParseError):
    def __init__(self, statement, line=None, source=None):
        self.statement = statement
        super().__init__(
            f"statement {statement!r} paired with two distinct contraries", line, source
        )


class DuplicateConclusion(ParseError):
    def __init__(self, arg, line=None, source=None):
        self.arg = arg
        super().__init__(f"argument {arg!r} has more than one conclusion", line, source)


class UnknownArgument(ArgumentationError, KeyError):
    def __init__(self, arg):
        self.arg = arg
        super().__init__(arg)

    def __str__(self):
        return f"unknown argument {self.arg!r}"


class PartialLabelling(ArgumentationError):
    def __init__(self, missing=(), extra=()):
        self.missing = tuple(missing)
        self.extra = tuple(extra)
        parts = []
        if self.missing:
            parts.append("unlabelled: " + ", ".join(self.missing))
        if self.extra:
            parts.append("not in framework: " + ", ".join(self.extra))
        super().__init__("labelling is not total over the framework (" + "; ".join(parts) + ")")


class OracleBoundExceeded(ArgumentationError):
    def __init__(self, n, bound):
        self.n = n
        self.bound = bound
        super().__init__(f"brute-force oracle refuses {n} arguments (bound {bound})")


class OracleMismatch(ArgumentationError):
    pass


class UnrealizableStatus(ArgumentationError, ValueError):
    pass


class OffVocabulary(ArgumentationError, KeyError):
    def __init__(self, statement):
        self.statement = statement
        super().__init__(statement)

    def __str__(self):
        return f"statement {self.statement!r} is not in the vocabulary"

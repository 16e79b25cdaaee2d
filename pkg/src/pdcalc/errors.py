"""Exception hierarchy shared by all modules.

Every error carries the module and operation that raised it so that the
command line front end can report it and choose an exit code.
"""


class PdcalcError(Exception):
    exit_code = 1

    def __init__(self, message, *, module=None, op=None):
        self.module = module
        self.op = op
        prefix = f"[{module}.{op}] " if module and op else ""
        super().__init__(prefix + message)


class FormatError(PdcalcError, ValueError):
    """Malformed input: dangling references, wrong shapes, bad indices."""

    exit_code = 2


class BoundError(PdcalcError, ValueError):
    """A truncation bound is too small for the requested operation."""

    exit_code = 2


class ResourceError(PdcalcError):
    """An enumeration exceeded its configured budget."""

    exit_code = 3

    def __init__(self, message, *, count=None, level=None, **kw):
        self.count = count
        self.level = level
        super().__init__(message, **kw)


class WordBoundExceeded(ResourceError):
    """Congruence closure did not stabilise below the word bound."""


class NotAQuasicategory(PdcalcError):
    def __init__(self, message, *, witness=None, **kw):
        self.witness = witness
        super().__init__(message, **kw)


class ConsistencyError(PdcalcError):
    """An internal invariant failed; indicates a bug or an invalid input."""


class NotQuasiRepresentable(PdcalcError):
    def __init__(self, message, *, failing=(), **kw):
        self.failing = tuple(failing)
        self.inconclusive = False
        super().__init__(message, **kw)


class InvalidCertificate(PdcalcError):
    exit_code = 2


class ColimitNotCreated(PdcalcError):
    """A diagram of ordinals does not glue to the nerve of its target."""

    exit_code = 2

"""Exception types shared by all modules."""


class NormalizationError(ValueError):
    """A user-facing precondition failed.

    ``module`` names the component that rejected the input; the string form
    is ``"<module>: <message>"``.
    """

    def __init__(self, module, message):
        self.module = module
        self.message = message
        super().__init__(f"{module}: {message}")


class CertificateError(AssertionError):
    """An internal self-check failed. This points at a bug, not bad input."""

    def __init__(self, module, message):
        self.module = module
        self.message = message
        super().__init__(f"{module}: {message}")

"""Exception taxonomy shared across the package."""


class TotSadicError(Exception):
    """Base class for all package errors."""


class InputError(TotSadicError, ValueError):
    """Malformed or out-of-domain input (parse failures, mixed fields)."""


class PreconditionError(TotSadicError, ValueError):
    """An operation's stated precondition does not hold."""


class CertificateFailure(TotSadicError):
    """A pipeline sub-certificate failed; the certificate is attached."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate

"""
Exception hierarchy for the cutnumber package.

Every exception carries a stable ``code`` string; the command line front end turns
any of them into a structured error object via ``to_dict``.
"""

from typing import Any, Dict, Iterable, List, Optional


class CutNumberError(Exception):
    """Root of all errors raised by the package."""

    code = "error"

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the error to a machine-readable dictionary.

        Returns:
            Dictionary with the error code, the message and any extra details
        """
        return {"error": self.code, "message": self.message, **self.details}


class ArityMismatchError(CutNumberError, ValueError):
    """Operands live in Laurent rings with different numbers of variables."""

    code = "arity_mismatch"


class InexactDivisionError(CutNumberError, ArithmeticError):
    """A division that was required to be exact left a remainder."""

    code = "inexact_division"


class ShapeError(CutNumberError, ValueError):
    """Matrix dimensions do not fit the requested operation."""

    code = "shape"


class AlphabetMismatchError(CutNumberError, ValueError):
    """Words over different generator alphabets were combined."""

    code = "alphabet_mismatch"


class GeneratorIndexError(CutNumberError, IndexError):
    """A generator index lies outside its alphabet."""

    code = "generator_index"


class WordSyntaxError(CutNumberError, ValueError):
    """Word or presentation text does not match the grammar."""

    code = "syntax"

    def __init__(self, message: str, line: int = 1, column: int = 1, **details: Any) -> None:
        super().__init__(
            f"{message} (line {line}, column {column})", line=line, column=column, **details
        )
        self.line = line
        self.column = column


class PresentationError(CutNumberError, ValueError):
    """A presentation file is malformed."""

    code = "presentation"


class NonPrimitivePhiError(CutNumberError, ValueError):
    """The character vector is not primitive (gcd of entries differs from 1)."""

    code = "phi_not_primitive"


class InconsistentPhiError(CutNumberError, ValueError):
    """Some relator has non-zero exponent sum under the character."""

    code = "phi_inconsistent"


class InvalidParametersError(CutNumberError, ValueError):
    """Parameters violate a documented precondition."""

    code = "invalid_parameters"


class UnsupportedParametersError(CutNumberError, ValueError):
    """Parameters are valid in principle but outside the supported range."""

    code = "unsupported_parameters"


class NotInCommutatorSubgroupError(CutNumberError, ValueError):
    """A word that must lie in the commutator subgroup has non-zero abelianization."""

    code = "not_in_commutator_subgroup"


class CheckFailedError(CutNumberError):
    """One or more named checks of a certificate did not pass."""

    code = "check_failed"

    def __init__(
        self, message: str, failed_checks: Optional[Iterable[str]] = None, **details: Any
    ) -> None:
        failed: List[str] = list(failed_checks or [])
        super().__init__(message, failed_checks=failed, **details)
        self.failed_checks = failed


class CertificateRefusedError(CheckFailedError):
    """A certificate was refused because a prerequisite fact does not hold."""

    code = "certificate_refused"


class UsageError(CutNumberError, ValueError):
    """Malformed command line."""

    code = "usage"


class OutputError(CutNumberError):
    """An output file could not be written."""

    code = "output"

"""
Exception hierarchy for orekit.

Failed verifications are reported through certificates, never raised.
The exceptions below signal misuse: operands from different rings, broken
preconditions, malformed scripts.
"""


class OrekitError(Exception):
    """Base class of every error raised by orekit."""


class FieldMismatchError(OrekitError, ValueError):
    """Operands live over different field descriptors."""


class RingMismatchError(OrekitError, ValueError):
    """Operands live in different Ore rings."""


class NotPrimeError(OrekitError, ValueError):
    """A characteristic or prime parameter is not prime."""


class NotInvertibleError(OrekitError, ZeroDivisionError):
    """Division by zero or inversion of a non-unit."""


class UnmappedGeneratorError(OrekitError, KeyError):
    """A ring homomorphism has no image for some generator."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else 'unmapped generator'


class WitnessError(OrekitError, ValueError):
    """A proposed preimage does not map to its target."""


class JetError(OrekitError, ValueError):
    """A jet homomorphism is malformed or cannot be extended to an element."""


class TruncationExhaustedError(JetError):
    """The top jet component is nonzero, so the working truncation is too small."""


class SliceConditionError(OrekitError, ValueError):
    """The proposed slice is not central or fails d1(x) = 1, di(x) = 0 for i >= 2."""


class NonKernelResidueError(OrekitError, ValueError):
    """A leading coefficient produced by the slice loop is not in the kernel."""


class ChainStallError(OrekitError, ValueError):
    """A nu-reduction step did not lower nu as predicted."""


class InsufficientPointsError(OrekitError, ValueError):
    """Fewer than d+1 distinct points were given for a degree-d certificate."""


class ConfigError(OrekitError, ValueError):
    """An environment variable or CLI option has an unusable value."""


class ScriptError(OrekitError):
    """An error located in a script, with 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self) -> str:
        if self.line:
            return f'{self.line}:{self.column}: {self.message}'
        return self.message


class ScriptSyntaxError(ScriptError):
    """The text does not match the script grammar."""


class UndefinedNameError(ScriptError):
    """A name is used before it is defined."""


class DuplicateNameError(ScriptError):
    """A name is defined twice."""


class ScriptRuntimeError(ScriptError):
    """A well-formed statement failed while executing."""

"""Exception hierarchy shared by every module.

Verifiers return reports; operations whose preconditions fail raise one of
these. The CLI turns them into exit codes via ``exit_code_for``.
"""

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_INPUT_ERROR = 2


class AlgebraError(Exception):
    """Base class for all errors raised by the toolkit"""

    exit_code = EXIT_MATH_FAILURE


class ShapeMismatchError(AlgebraError):
    pass


class InconsistentSystemError(AlgebraError):
    """A linear system A·x = b has no exact solution"""


class SingularOperatorError(AlgebraError):
    pass


class InvalidParameterError(AlgebraError):
    exit_code = EXIT_INPUT_ERROR


class AxiomError(AlgebraError):
    """Input structure constants violate a named axiom"""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, axiom: str, detail: str = ""):
        self.axiom = axiom
        self.detail = detail
        message = f"axiom '{axiom}' fails"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class NoIntegralError(AlgebraError):
    pass


class NotSimpleError(AlgebraError):
    pass


class DegreeCapError(AlgebraError):
    """Requested degree or dimension is above a configured cap"""

    exit_code = EXIT_INPUT_ERROR


class InputFormatError(AlgebraError):
    exit_code = EXIT_INPUT_ERROR


def exit_code_for(error: Exception) -> int:
    if isinstance(error, AlgebraError):
        return error.exit_code
    return EXIT_INPUT_ERROR

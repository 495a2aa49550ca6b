class HausdorffError(Exception):
    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class InputError(HausdorffError, ValueError):
    pass


class DomainError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, offset: int, text: str = ""):
        super().__init__(message + " at offset " + str(offset))
        self.offset = offset
        self.text = text


class UnsupportedFormError(InputError):
    pass


class PreconditionError(InputError):
    pass


class BudgetError(HausdorffError):
    exit_code = 2


class InconsistencyError(HausdorffError):
    """
    A proved verdict was contradicted by an exact finite-difference witness.
    This indicates a bug, never a property of the input.
    """

    exit_code = 3

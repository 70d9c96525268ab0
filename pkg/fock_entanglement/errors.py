class FockError(ValueError):
    """Base class for all precondition failures raised by fock_entanglement"""


class StatisticsMismatchError(FockError):
    pass


class ModeIndexError(FockError):
    pass


class BipartitionSyntaxError(ModeIndexError):
    """A bipartition string such as '1,2|3' cannot be read"""


class SectorError(FockError):
    pass


class SectorOverflowError(FockError):
    """
    An operator application would leave the configured particle-number truncation
    """


class FermiParityIndefiniteError(FockError):
    """
    A Fermi state has no definite particle-number parity on the first block
    of a bipartition, so it is not pure on the even sub-algebras.
    """


class BudgetExceededError(FockError):
    pass


class StateFormatError(FockError):
    pass


class ExpressionSyntaxError(FockError):
    def __init__(self, message: str, offset: int):
        """
        Error while parsing an operator expression
        :param message: description of the problem
        :param offset: byte offset in the input text where the problem was found
        """
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset

"""Exception hierarchy shared by every module."""


class PseudoCentroError(Exception):
    """Base class for all library errors."""


class FieldError(PseudoCentroError, ValueError):
    """Invalid field construction or mixing of incompatible fields."""


class DimensionError(PseudoCentroError, ValueError):
    pass


class SingularMatrixError(PseudoCentroError, ArithmeticError):
    pass


class StructureError(PseudoCentroError, ValueError):
    """A matrix lacks the structure an operation requires."""


class GuardError(PseudoCentroError, ValueError):
    """An exponential or brute-force routine was asked to exceed its size guard."""


class GraphError(PseudoCentroError, ValueError):
    pass


class NotSumOfTwoSquaresError(PseudoCentroError, ValueError):
    def __init__(self, n, prime, exponent):
        self.n = n
        self.prime = prime
        self.exponent = exponent
        super().__init__(
            f"{n} is not a sum of two squares: prime {prime} = 4k+3 "
            f"occurs to the odd power {exponent}"
        )


class ParseError(PseudoCentroError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)

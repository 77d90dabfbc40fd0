"""Domain errors raised by the combinadics library.

Every error carries a ``kind`` (the class name) so the CLI can print a
stable ``ERROR <kind>: <detail>`` line.
"""


class CombinadicError(ValueError):
    """Base class for all domain errors."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class NegativeValue(CombinadicError):
    pass


class InvalidDegree(CombinadicError):
    """Raised when the number of terms r is not positive."""


class OutOfDomain(CombinadicError):
    """Raised when an identity evaluator is called outside its index range."""


class EmptyRepresentation(CombinadicError):
    pass


class NotStrictlyDecreasing(CombinadicError):
    def __init__(self, coeffs, index):
        self.coeffs = tuple(coeffs)
        self.index = index
        r = len(self.coeffs)
        hi, lo = r - index, r - index - 1
        super().__init__(
            f"C_{hi}={self.coeffs[index]} must exceed C_{lo}={self.coeffs[index + 1]} "
            f"(positions {index},{index + 1})"
        )


class NotStrictlyIncreasing(CombinadicError):
    def __init__(self, elements, index):
        self.elements = tuple(elements)
        self.index = index
        super().__init__(
            f"element {self.elements[index]} at position {index} is not below "
            f"{self.elements[index + 1]} at position {index + 1}"
        )


class EmptyCombination(CombinadicError):
    pass


class PredecessorOfZero(CombinadicError):
    pass


class DegreeMismatch(CombinadicError):
    pass


class InvalidRange(CombinadicError):
    pass


class ElementOutOfUniverse(CombinadicError):
    pass


class MalformedBitstring(CombinadicError):
    pass

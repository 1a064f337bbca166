"""Exception types shared across the package."""


class ShapeMismatch(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class Singular(ArithmeticError):
    """A square matrix has no two-sided inverse under the rc-product."""


class BasisMismatch(ValueError):
    """Homomorphisms are expressed relative to incompatible bases."""


class ArityMismatch(ValueError):
    """Wrong number of arguments supplied to a polylinear map."""


class ConfigError(ValueError):
    """Suite configuration out of range."""


class ParseError(ValueError):
    """Malformed quaternion / matrix / tensor text.

    ``offset`` is the 0-based character position where parsing failed.
    """

    def __init__(self, message, offset=0, text=None):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")

"""Exception types shared across the package."""


class ChainLoopError(Exception):
    """Base class for all errors raised by chainloop."""


class NonPositiveLength(ChainLoopError, ValueError):
    pass


class LengthCountMismatch(ChainLoopError, ValueError):
    pass


class EmptyRange(ChainLoopError, ValueError):
    pass


class NotGeneric(ChainLoopError, ValueError):
    """The edge lengths violate the genericity condition needed by the caller."""


class BoundExceeded(ChainLoopError, ArithmeticError):
    """A symbolic comparison needs a multiplier beyond the 2g-2 safety bound.

    Under genericity, ``c*m == 0 (mod L)`` is only decided for ``|c| <= 2g-2``.
    """

    def __init__(self, loop: int, coefficient: int, bound: int):
        self.loop = loop
        self.coefficient = coefficient
        self.bound = bound
        super().__init__(
            f"loop {loop}: multiplier {coefficient} exceeds symbolic bound {bound}"
        )


class AmbiguousClass(ChainLoopError, ValueError):
    """A symbolic class has more than one possible reduction."""


class DiscontinuousInput(ChainLoopError, ValueError):
    pass


class NotEquivalent(ChainLoopError):
    """Two divisors are not linearly equivalent."""


class IndexOutOfRange(ChainLoopError, IndexError):
    pass


class NonIntegralScale(ChainLoopError, ValueError):
    pass


class DegreeTooLarge(ChainLoopError, ValueError):
    pass


class DiscretizationTooLarge(ChainLoopError, ValueError):
    pass


class OddGenus(ChainLoopError, ValueError):
    pass

"""Exception types.

Errors that signal a falsified identity (NotDivisible, Stuck, MultisetMismatch)
carry the offending data so callers can print a certificate.
"""


class QCatalanError(Exception):
    """Base class for all package errors."""


class NotDivisible(QCatalanError, ArithmeticError):
    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"({dividend}) is not divisible by ({divisor}); remainder {remainder}")


class NotCoprime(QCatalanError, ValueError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"gcd({a}, {b}) != 1")


class NotCoprimeToCF(QCatalanError, ValueError):
    def __init__(self, system, b, modulus):
        self.system, self.b, self.modulus = system, b, modulus
        super().__init__(f"{system}: gcd({b}, {modulus}) != 1")


class ResourceLimit(QCatalanError):
    def __init__(self, predicted, budget, what="points"):
        self.predicted, self.budget = predicted, budget
        super().__init__(f"{what}: predicted {predicted} exceeds budget {budget}")


class SearchTimeout(QCatalanError):
    def __init__(self, nodes, budget):
        self.nodes, self.budget = nodes, budget
        super().__init__(f"search stopped after {nodes} nodes (budget {budget})")


class NotRootPoint(QCatalanError, ValueError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"{list(point)} is not in the root lattice")


class Stuck(QCatalanError):
    """Greedy partitioning found no available point at ``height``."""

    def __init__(self, height, block):
        self.height = height
        self.block = block
        super().__init__(f"greedy partition stuck: no free point at height {height} (partial block {block})")


class MalformedPartition(QCatalanError, ValueError):
    pass


class DimensionMismatch(QCatalanError, ValueError):
    pass


class MultisetMismatch(QCatalanError):
    def __init__(self, left, right):
        self.left, self.right = left, right
        super().__init__(f"J-value multisets differ: {left} vs {right}")

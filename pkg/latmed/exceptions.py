class LatmedException(Exception):
    """
    Basic error for the whole package.
    """
    pass


class ValidationError(LatmedException):
    """
    Data validation exception.
    """
    pass


class CycleError(ValidationError):
    """
    The cover relation contains a directed cycle.
    """
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(
            "covers are not acyclic: {c}".format(
                c=" -> ".join(str(a) for a, _ in self.cycle + self.cycle[:1])
            )
        )


class NotALattice(ValidationError):
    """
    The order has no unique bottom/top or some pair lacks a join or meet.
    """
    pass


class TransitiveCoverError(ValidationError):
    """
    A cover pair is implied by transitivity of the other pairs.
    """
    def __init__(self, pair, via):
        self.pair = pair
        self.via = via
        super().__init__(
            "cover ({a},{b}) is transitively implied via {v}".format(
                a=pair[0], b=pair[1], v=via
            )
        )


class ElementIndexError(ValidationError, IndexError):
    """
    An element index is outside of 0..n-1.
    """
    def __init__(self, index, n):
        self.index = index
        self.n = n
        super().__init__(
            "element {i} is out of range 0..{m}".format(i=index, m=n - 1)
        )


class EmptyInterval(ValidationError):
    """
    Interval [a, b] requested with a not below b.
    """
    pass


class PreconditionFailed(ValidationError):
    """
    An operation was called outside of its precondition.
    """
    pass


class ConstructionError(LatmedException):
    """
    Base error for lattice constructions.
    """
    pass


class NotJoinPrime(ConstructionError):
    pass


class NotComparable(ConstructionError):
    pass


class ZeroForbidden(ConstructionError):
    pass


class BadParams(ConstructionError):
    pass


class NotAProduct(ConstructionError):
    pass


class ParseError(LatmedException):
    """
    Base parse exception for lattice files.
    """
    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = "line {n}: {m}".format(n=line_no, m=message)
        super().__init__(message)


class CapExceeded(LatmedException):
    """
    A harness run was requested beyond the configured caps.
    """
    pass

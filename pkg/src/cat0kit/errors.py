"""Exception hierarchy shared by every module in the package."""


class Cat0Error(Exception):
    """Base class for all errors raised by cat0kit."""


# complexes

class DuplicateVertexInSimplex(Cat0Error):
    pass


class DisconnectedComplex(Cat0Error):
    pass


class EmptyOrDisconnectedResult(DisconnectedComplex):
    pass


class SimplexNotInComplex(Cat0Error):
    pass


class UnknownVertex(Cat0Error, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return Exception.__str__(self)


class NotAnEdge(Cat0Error):
    pass


class DimensionTooHigh(Cat0Error):
    pass


class NotSimplicial(Cat0Error):
    pass


# curvature

class UnsupportedN(Cat0Error, ValueError):
    pass


# paths

class InvalidStep(Cat0Error):
    pass


class GeodesicOverflow(Cat0Error):
    pass


# disks

class NotADisk(Cat0Error):
    pass


class LabelNotAFace(NotADisk):
    pass


class SingularDisk(Cat0Error):
    pass


class NotClosed(Cat0Error):
    pass


class NoDiskWithinBound(Cat0Error):
    pass


class LabelMismatchOnGamma(Cat0Error):
    pass


class UnresolvableVertex(Cat0Error):
    pass


# moves

class MoveMismatch(Cat0Error):
    pass


class TargetNotGeodesic(Cat0Error):
    pass


class EndpointMismatch(Cat0Error):
    pass


class StraighteningFailed(Cat0Error):
    """No basic-move sequence exists; only possible outside CAT(0) complexes."""


# GS geodesics

class NotGeodesic(Cat0Error):
    pass


class TooManyCompanions(Cat0Error):
    pass


class NonTermination(Cat0Error):
    pass


# automata

class AlphabetMismatch(Cat0Error):
    pass


# io

class ComplexSyntaxError(Cat0Error):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TooHighDimension(Cat0Error):
    pass


class BadParams(Cat0Error, ValueError):
    pass


class DeclaredCat0Contradiction(Cat0Error):
    pass

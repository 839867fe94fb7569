from typing import Optional


class LatticeError(Exception):
    """Base class of every error raised by fuzzy_lattice.
    
    """
    pass


class EmptySetError(LatticeError, ValueError):
    """Raised when an operation requires a nonempty set (bounds, the ≤_S order, ∪_S/∩_S, hesitant operators).
    
    """
    pass


class EmptyAtomError(LatticeError, ValueError):
    """Raised when an atom would denote the empty set, such as an inverted interval or an irrational-only point.
    
    """
    pass


class RangeError(LatticeError, ValueError):
    """Raised when a rational literal or grade lies outside the unit interval.
    
    """
    pass


class InvalidPairError(LatticeError, ValueError):
    pass


class InvalidFError(LatticeError, ValueError):
    pass


class UniverseMismatchError(LatticeError, ValueError):
    pass


class EmptyGradeError(LatticeError, ValueError):
    """Raised when a strict set-valued fuzzy set would receive the empty set as a membership degree.
    
    """
    def __init__(self, message: str, label: Optional[str] = None):
        super().__init__(message)
        self.label = label
        
        return
    
    pass


class FamilyMismatchError(LatticeError, TypeError):
    pass


class InvalidNestingError(LatticeError, ValueError):
    pass


class NotOnGridError(LatticeError, ValueError):
    pass


class UnknownNameError(LatticeError, KeyError):
    """Raised for an unknown suite, map, diagram, property or operator name.
    
    """
    def __str__(self):
        # KeyError quotes its argument, keep the plain message instead.
        return str(self.args[0]) if self.args else ""
    
    pass


class ExpressionSyntaxError(LatticeError, ValueError):
    """Raised by the expression parser. The position is a zero based offset into the parsed text.
    
    """
    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = "{} (at position {})".format(message, position)
        super().__init__(message)
        self.position = position
        
        return
    
    pass


class DocumentError(LatticeError, ValueError):
    """Raised for malformed documents. The line number is one based.
    
    """
    def __init__(self, message: str, line: Optional[int] = None, position: Optional[int] = None):
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)
        self.line = line
        self.position = position
        
        return
    
    pass


class InvariantError(LatticeError, AssertionError):
    """Raised when a result violates a guarantee the algebra proves, i.e. an implementation bug.
    
    """
    pass


class NotClosedError(LatticeError, ValueError):
    """Raised when a closed-set grade is built from a set that is empty or not topologically closed.
    
    """
    pass


class InvalidPartitionError(LatticeError, ValueError):
    """Raised when the pieces of a grade function do not partition [0,1] exactly once.
    
    """
    pass


class InvalidUniverseError(LatticeError, ValueError):
    """Raised for an empty universe or one with repeated labels.
    
    """
    pass


class InvalidParamsError(LatticeError, ValueError):
    """Raised for generation parameters that are not positive.
    
    """
    pass


class OutputError(LatticeError, OSError):
    """Raised when a rendered figure or report cannot be written.
    
    """
    pass

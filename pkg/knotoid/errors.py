# encoding=utf-8
"""
Exceptions raised by the knotoid engine
"""


class KnotoidGenericError(Exception):
    """ Generic error """


class KnotoidParseError(KnotoidGenericError):
    """ Error parsing a polynomial, sequence or diagram text """
    def __init__(self, message, line=1, column=1):
        super(KnotoidParseError, self).__init__("{} (line {}, column {})".format(message, line, column))
        self.line = line
        self.column = column


class KnotoidValidationError(KnotoidGenericError):
    """ Diagram does not satisfy the map invariants """
    def __init__(self, report):
        super(KnotoidValidationError, self).__init__(str(report))
        self.report = report


class KnotoidArityError(KnotoidGenericError):
    """ One and two variable polynomials were mixed """


class KnotoidMoveError(KnotoidGenericError):
    """ Move site is stale or not applicable """


class KnotoidBudgetError(KnotoidGenericError):
    """ Computation refused because it exceeds a configured guard """


class KnotoidConsistencyError(KnotoidGenericError):
    """ An identity that must always hold was violated """

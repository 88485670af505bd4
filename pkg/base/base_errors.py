class QesError(Exception):
    """
    Base class for all engine errors
    """


class SingularSpecialization(QesError):
    """
    A parameter specialization makes a denominator vanish.

    :param factor: the denominator (as printed text) that vanishes.
    """

    def __init__(self, name, value, factor):
        self.name = name
        self.value = value
        self.factor = factor
        super().__init__("singular specialization {}={}: denominator {} vanishes".format(name, value, factor))


class NonLaurentCoefficient(QesError):
    def __init__(self, coefficient):
        self.coefficient = coefficient
        super().__init__("non-Laurent coefficient: {}".format(coefficient))


class PreconditionError(QesError):
    pass


class MappingContractViolated(QesError):
    pass


class DegenerateExtension(QesError):
    pass


class NoGeneratorFamily(QesError):
    pass


class InvarianceFailure(QesError):
    def __init__(self, report, message="operator does not preserve the space"):
        self.report = report
        super().__init__(message)


class ClosureFailure(QesError):
    def __init__(self, pair, residual):
        self.pair = pair
        self.residual = residual
        super().__init__("does not close linearly: [g{}, g{}]".format(*pair))


class DslSyntaxError(QesError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = '' if line is None else ' at line {}, column {}'.format(line, column)
        super().__init__("syntax error{}: {}".format(where, message))

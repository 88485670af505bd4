import logging
from abc import abstractmethod
from dataclasses import dataclass, field

from base.base_errors import InvarianceFailure

__all__ = ['BaseSpace', 'InvarianceReport']


@dataclass
class InvarianceReport:
    """
    Outcome of an invariance check. Each witness is a triple
    (basis element, offending output term, coefficient), already printable.
    """
    verdict: bool = True
    witnesses: list = field(default_factory=list)

    @classmethod
    def from_witnesses(cls, witnesses):
        witnesses = list(witnesses)
        return cls(verdict=not witnesses, witnesses=witnesses)

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'witnesses': [[str(part) for part in w] for w in self.witnesses],
        }

    def __bool__(self):
        return self.verdict


class BaseSpace:
    """
    Base class for all finite-dimensional function spaces
    """
    logger = logging.getLogger('spaces')

    @abstractmethod
    def basis(self):
        """
        Ordered basis labels

        :return: list of basis labels, the order every report refers to
        """
        raise NotImplementedError

    @abstractmethod
    def apply(self, op, index):
        """
        Image of the basis element ``index`` under ``op``
        """
        raise NotImplementedError

    @abstractmethod
    def coordinates(self, element):
        """
        Coordinates of ``element`` in the basis.

        :return: (coordinate list, list of (offending term, coefficient))
        """
        raise NotImplementedError

    def dim(self):
        return len(self.basis())

    def check_invariance(self, op):
        witnesses = []
        for index, label in enumerate(self.basis()):
            image = self.apply(op, index)
            self.logger.debug('%s acting on %s: %s', type(self).__name__, label, image)
            _, outside = self.coordinates(image)
            witnesses.extend((label, term, coeff) for term, coeff in outside)
        report = InvarianceReport.from_witnesses(witnesses)
        self.logger.info('invariance on %s: %s (%d witnesses)', self, report.verdict, len(witnesses))
        return report

    def matrix(self, op):
        """
        Columns of the restriction of ``op`` to the space.

        :raises InvarianceFailure: if ``op`` leaves the space
        """
        columns = []
        witnesses = []
        for index, label in enumerate(self.basis()):
            coords, outside = self.coordinates(self.apply(op, index))
            witnesses.extend((label, term, coeff) for term, coeff in outside)
            columns.append(coords)
        if witnesses:
            report = InvarianceReport.from_witnesses(witnesses)
            raise InvarianceFailure(report, 'operator does not preserve {}'.format(self))
        return columns

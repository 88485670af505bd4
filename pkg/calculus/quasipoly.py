from collections import defaultdict

from kernel import PDOM, QuasiExponent, format_scalar, param, specialize_scalar

__all__ = ['QuasiPoly']


class QuasiPoly:
    """
    Finite sum of quasi-monomials c*x^(offset + a_part*a) with ParamScalar c.
    """
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        clean = {}
        for exponent, coeff in (terms or {}).items():
            coeff = param(coeff)
            if coeff:
                clean[exponent if isinstance(exponent, QuasiExponent) else QuasiExponent(exponent)] = coeff
        object.__setattr__(self, 'terms', clean)

    def __setattr__(self, key, value):
        raise AttributeError('QuasiPoly is immutable')

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def from_pairs(cls, pairs):
        acc = defaultdict(lambda: PDOM.zero)
        for exponent, coeff in pairs:
            acc[exponent] = acc[exponent] + param(coeff)
        return cls(acc)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def exponents(self):
        return sorted(self.terms)

    def coefficient(self, exponent):
        return self.terms.get(exponent, PDOM.zero)

    def __add__(self, other):
        return QuasiPoly.from_pairs(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return QuasiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = param(scalar)
        return QuasiPoly({e: c * scalar for e, c in self.terms.items()})

    def specialize(self, a0):
        """Evaluate a at the rational a0; exponents collapse to rationals."""
        return QuasiPoly.from_pairs((e.specialize(a0), specialize_scalar(c, 'a', a0))
                                    for e, c in self.terms.items())

    def __eq__(self, other):
        return isinstance(other, QuasiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join('({})*x^({})'.format(format_scalar(c), e) for e, c in self)

    def __repr__(self):
        return 'QuasiPoly({})'.format(self)

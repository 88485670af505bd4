from .ast import Call, Comm, Num, Param, Power, Product, Sum, Var

__all__ = ['to_source']


def _num(value):
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def _wrap(text):
    return '({})'.format(text)


def _term(node):
    """A term of a sum: nested sums keep their parentheses."""
    return _wrap(to_source(node)) if isinstance(node, Sum) else to_source(node)


def _factor(node):
    if isinstance(node, (Sum, Product)):
        return _wrap(to_source(node))
    return to_source(node)


def _base(node):
    if isinstance(node, (Sum, Product, Power)) or (isinstance(node, Num) and node.value.denominator != 1):
        return _wrap(to_source(node))
    return to_source(node)


def to_source(node):
    """
    Canonical text of a syntax tree; ``parse(to_source(t)) == t``.
    """
    if isinstance(node, Num):
        return _num(node.value)
    if isinstance(node, (Var, Param)):
        return node.name
    if isinstance(node, Sum):
        sign, first = node.terms[0]
        text = ('-' if sign == '-' else '') + _term(first)
        for sign, term in node.terms[1:]:
            text += ' {} {}'.format(sign, _term(term))
        return text
    if isinstance(node, Product):
        text = _factor(node.factors[0][1])
        for op, factor in node.factors[1:]:
            text += '*' + _factor(factor) if op == '*' else ' / ' + _factor(factor)
        return text
    if isinstance(node, Power):
        exponent = node.exponent
        exponent = str(exponent) if isinstance(exponent, int) else _wrap(to_source(exponent))
        return '{}^{}'.format(_base(node.base), exponent)
    if isinstance(node, Comm):
        return 'comm({}, {})'.format(to_source(node.lhs), to_source(node.rhs))
    if isinstance(node, Call):
        args = [to_source(a) for a in node.args]
        args += ['{}={}'.format(key, to_source(value)) for key, value in node.kwargs]
        return '{}({})'.format(node.name, ', '.join(args))
    raise TypeError('not a syntax tree node: {!r}'.format(node))

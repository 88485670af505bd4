"""
Operator relations checked on a space or as normal forms.
"""
import logging
from dataclasses import dataclass, field

__all__ = ['RelationVerdict', 'verify_relation', 'nilpotency_check', 'SCOPES']

logger = logging.getLogger(__name__)

SCOPES = ('on-space', 'canonical')


@dataclass
class RelationVerdict:
    verdict: bool
    scope: str
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'scope': self.scope,
            'witnesses': [[str(part) for part in w] for w in self.witnesses],
        }

    def __bool__(self):
        return self.verdict


def verify_relation(lhs, rhs, space=None, scope='on-space'):
    """
    lhs = rhs either as actions on every basis vector of ``space`` or as
    normal-ordered operators.
    """
    assert scope in SCOPES, 'unknown scope {}, expected one of {}'.format(scope, SCOPES)
    if scope == 'canonical':
        difference = lhs - rhs
        witnesses = [] if not difference else [('normal form', difference)]
    else:
        witnesses = []
        for index, label in enumerate(space.basis()):
            left, right = space.apply(lhs, index), space.apply(rhs, index)
            if left != right:
                witnesses.append((label, left - right))
    verdict = RelationVerdict(verdict=not witnesses, scope=scope, witnesses=witnesses)
    logger.info('relation %s', 'holds' if verdict.verdict else 'fails')
    return verdict


def nilpotency_check(ops, space):
    """
    Whether every product ops[i] ops[j] annihilates the basis of ``space``.
    """
    witnesses = []
    for i, first in enumerate(ops):
        for j, second in enumerate(ops):
            product = first * second
            for index, label in enumerate(space.basis()):
                image = space.apply(product, index)
                if image:
                    witnesses.append(('{}*{}'.format(i, j), label, image))
    return RelationVerdict(verdict=not witnesses, scope='on-space', witnesses=witnesses)

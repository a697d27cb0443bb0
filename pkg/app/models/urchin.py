"""
Sea Urchin Models
"""
from dataclasses import dataclass
from math import gcd
from typing import Tuple, Union

from app.config.constants import POINT_INTERIOR, POINT_SPIKE
from app.models.hinge import Hinge
from app.models.matrix import RationalMatrix
from app.models.rep import BlockOperator, Signature
from app.utils.exceptions import ParseError, ValidationError


@dataclass(frozen=True)
class Interior:
    """A point of GL_n itself"""
    g: RationalMatrix

    kind = POINT_INTERIOR

    def to_dict(self):
        return {'type': POINT_INTERIOR, 'g': self.g.to_dict()}


@dataclass(frozen=True)
class Spike:
    """
    Primitive exponent vector m with a hinge in the orbit labelled by the
    multiplicities of m. Equality as urchin points is up to the scalar
    action (c^k_1 P_1, ..., c^k_t P_t), see UrchinService.spike_equal.
    """
    m: Tuple[int, ...]
    hinge: Hinge

    kind = POINT_SPIKE

    def __post_init__(self):
        if any(a < b for a, b in zip(self.m, self.m[1:])):
            raise ValidationError(f"spike exponents must be non-increasing: {self.m}")
        if not any(self.m):
            raise ValidationError("a spike needs a nonzero exponent vector")
        divisor = 0
        for value in self.m:
            divisor = gcd(divisor, value)
        if divisor != 1:
            raise ValidationError(f"spike exponents must be primitive, gcd is {divisor}")
        multiplicities = []
        for i, value in enumerate(self.m):
            if i and self.m[i - 1] == value:
                multiplicities[-1] += 1
            else:
                multiplicities.append(1)
        if tuple(multiplicities) != self.hinge.label().alpha:
            raise ValidationError(
                f"hinge orbit {self.hinge.label()} does not match the multiplicities of m={self.m}"
            )

    @property
    def k(self) -> Tuple[int, ...]:
        """Distinct exponents k_1 > ... > k_t"""
        out = []
        for value in self.m:
            if not out or out[-1] != value:
                out.append(value)
        return tuple(out)

    def to_dict(self):
        return {'type': POINT_SPIKE, 'm': list(self.m), 'hinge': self.hinge.to_dict()}


UrchinPoint = Union[Interior, Spike]


def point_from_dict(data) -> UrchinPoint:
    """Parse an urchin point; spike hinges must be validated by the caller."""
    from app.services.hinge_service import HingeService

    if not isinstance(data, dict) or data.get('type') not in (POINT_INTERIOR, POINT_SPIKE):
        raise ParseError("urchin point must be an object with type 'interior' or 'spike'")
    if data['type'] == POINT_INTERIOR:
        if 'g' not in data:
            raise ParseError("interior point needs a matrix g")
        return Interior(RationalMatrix.from_dict(data['g']))
    if 'm' not in data or 'hinge' not in data:
        raise ParseError("spike needs m and hinge")
    if not isinstance(data['m'], list) or any(isinstance(x, bool) or not isinstance(x, int) for x in data['m']):
        raise ParseError("spike m must be a list of integers")
    n, terms = Hinge.parse_terms(data['hinge'])
    return Spike(tuple(data['m']), HingeService.validate_hinge(terms, n))


@dataclass(frozen=True)
class CompactificationSpec:
    """zeta = rho_nu(1) (+) ... (+) rho_nu(s)"""
    signatures: Tuple[Signature, ...]

    def __post_init__(self):
        if not self.signatures:
            raise ValidationError("a compactification needs at least one signature")

    def to_dict(self):
        return [str(s) for s in self.signatures]

    def __str__(self):
        return " + ".join(f"rho_({s})" for s in self.signatures)


@dataclass(frozen=True)
class Projection:
    """
    Image of an urchin point in P(End(zeta)), defined up to one scalar.

    weights[l] is v_l = sum m_j nu_j; blocks with v_l below the maximum are zero.
    """
    spec: CompactificationSpec
    operator: BlockOperator
    weights: Tuple[int, ...]

    @property
    def top_weight(self) -> int:
        return max(self.weights)

    def zeroed(self) -> Tuple[bool, ...]:
        return tuple(b.is_zero() for b in self.operator.blocks)

    def to_dict(self):
        return {
            'signatures': self.spec.to_dict(),
            'weights': list(self.weights),
            'top_weight': self.top_weight,
            'zeroed': list(self.zeroed()),
            'blocks': [b.to_dict() for b in self.operator.blocks],
        }

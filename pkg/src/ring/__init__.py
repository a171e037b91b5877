from .glring import (GLRing, Polynomial, ReducedMonomial, RingElement, compositions, ring_for, reduce,
                     multiply, monomial_basis, hilbert)

__all__ = ['GLRing', 'Polynomial', 'ReducedMonomial', 'RingElement', 'compositions', 'ring_for', 'reduce',
           'multiply', 'monomial_basis', 'hilbert']

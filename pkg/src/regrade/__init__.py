from .regrade import (RegradedComponent, RegradedElement, coset_reps, regrade_component, regrade_identity,
                      regrade_multiply, triangular_tensor_dim, b_algebra_dim, regraded_series,
                      triangular_series, b_algebra_series, transport_shift, untransport, component_total)

__all__ = ['RegradedComponent', 'RegradedElement', 'coset_reps', 'regrade_component', 'regrade_identity',
           'regrade_multiply', 'triangular_tensor_dim', 'b_algebra_dim', 'regraded_series',
           'triangular_series', 'b_algebra_series', 'transport_shift', 'untransport', 'component_total']

from .gltype import GLType, ValidationReport, validate_type, require_valid, strata, check_stratum
from .projcohom import CohomologyVector, h, cohomology, hom_dim, ext_dims

__all__ = ['GLType', 'ValidationReport', 'validate_type', 'require_valid', 'strata', 'check_stratum',
           'CohomologyVector', 'h', 'cohomology', 'hom_dim', 'ext_dims']

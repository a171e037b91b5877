from .bundle import TiltingDatum, CartanMatrix, PairExt, RigidityReport, build_tilting, cartan, rigidity_report
from .endo import BasisElement, EndoAlgebra, endo_algebra
from .quiver import (Arrow, Relation, RelationTerm, QuiverPresentation, GenerationReport, SpanDeficit,
                     quiver_arrows, choose_pivot, pivot_coefficients, quiver_presentation, path_element,
                     relation_value, arrow_generation_check)

__all__ = ['TiltingDatum', 'CartanMatrix', 'PairExt', 'RigidityReport', 'build_tilting', 'cartan',
           'rigidity_report', 'BasisElement', 'EndoAlgebra', 'endo_algebra', 'Arrow', 'Relation',
           'RelationTerm', 'QuiverPresentation', 'GenerationReport', 'SpanDeficit', 'quiver_arrows',
           'choose_pivot', 'pivot_coefficients', 'quiver_presentation', 'path_element', 'relation_value',
           'arrow_generation_check']

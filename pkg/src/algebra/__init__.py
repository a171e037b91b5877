from .linalg import RowSpace, fstr, integer_rows, rank, solve, to_fraction

__all__ = ['RowSpace', 'fstr', 'integer_rows', 'rank', 'solve', 'to_fraction']

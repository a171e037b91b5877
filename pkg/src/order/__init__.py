from .ordermodel import (ColumnBundle, DivisorTwist, LocalType, multi_indices, order_entry, composite_entry,
                         twisted_column, top_entry, local_type)

__all__ = ['ColumnBundle', 'DivisorTwist', 'LocalType', 'multi_indices', 'order_entry', 'composite_entry',
           'twisted_column', 'top_entry', 'local_type']

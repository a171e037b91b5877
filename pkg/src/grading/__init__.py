from .lgroup import (LElement, normal_form, group_op, zero, generator, canonical, is_effective, leq,
                     in_interval, interval, interval_size, format_element, parse_element, coerce)

__all__ = ['LElement', 'normal_form', 'group_op', 'zero', 'generator', 'canonical', 'is_effective', 'leq',
           'in_interval', 'interval', 'interval_size', 'format_element', 'parse_element', 'coerce']

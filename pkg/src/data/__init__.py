from .spec_loader import TypeSpecLoader, load_type, type_from_dict, load_schema

__all__ = ['TypeSpecLoader', 'load_type', 'type_from_dict', 'load_schema']

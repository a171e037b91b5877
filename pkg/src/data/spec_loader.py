import json
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from src.errors import InputError, SpecFileError
from src.geometry.gltype import GLType
from src.logs import get_logger

logger = get_logger(__name__)

YAML_SUFFIXES = ('.yaml', '.yml')
REQUIRED_KEYS = ('d', 'weights', 'hyperplanes')


class TypeSpecLoader:
    """Reads a type spec {"d", "weights", "hyperplanes"} from JSON or YAML."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.raw = self._read()
        self.type = self._build(self.raw)
        logger.debug(f"loaded {self.path.name}: d={self.type.d}, weights={list(self.type.weights)}")

    def _read(self) -> Dict[str, Any]:
        if not self.path.is_file():
            raise SpecFileError(f"spec file not found: {self.path}")
        text = self.path.read_text(encoding='utf-8')
        try:
            if self.path.suffix.lower() in YAML_SUFFIXES:
                data = yaml.safe_load(text)
            else:
                data = json.loads(text)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise SpecFileError(f"malformed spec file {self.path}: {e}") from e
        if not isinstance(data, dict):
            raise SpecFileError(f"spec file {self.path} must hold an object")
        return data

    def _build(self, data: Dict[str, Any]) -> GLType:
        missing = [k for k in REQUIRED_KEYS if k not in data]
        if missing:
            raise SpecFileError(f"spec file {self.path} lacks {', '.join(missing)}")
        if not isinstance(data['weights'], list) or not isinstance(data['hyperplanes'], list):
            raise SpecFileError(f"weights and hyperplanes must be lists in {self.path}")
        try:
            return GLType.create(data['d'], data['weights'], data['hyperplanes'])
        except InputError:
            raise
        except (TypeError, ValueError) as e:
            raise SpecFileError(f"bad values in {self.path}: {e}") from e


def load_type(path: Union[str, Path]) -> GLType:
    return TypeSpecLoader(path).type


def type_from_dict(data: Dict[str, Any]) -> GLType:
    missing = [k for k in REQUIRED_KEYS if k not in data]
    if missing:
        raise InputError(f"type spec lacks {', '.join(missing)}")
    return GLType.create(data['d'], data['weights'], data['hyperplanes'])


SCHEMA_DIR = Path(__file__).parent / "schemas"


def load_schema(command: str) -> Dict[str, Any]:
    """JSON schema of the --format json output of a command."""
    path = SCHEMA_DIR / f"{command}.json"
    if not path.is_file():
        raise SpecFileError(f"no schema shipped for {command!r}")
    return json.loads(path.read_text(encoding='utf-8'))

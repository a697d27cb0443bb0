"""
Input Validators
"""
import json
import logging
import re
import sys
from typing import List, Optional, Sequence

from app.models.hinge import Hinge
from app.models.laurent import LaurentMatrix
from app.models.matrix import RationalMatrix
from app.models.relation import LinearRelation
from app.models.rep import Signature
from app.models.urchin import CompactificationSpec, point_from_dict
from app.utils.exceptions import ParseError

logger = logging.getLogger(__name__)

_SIGNATURE_PATTERN = re.compile(r'^\s*\d+(\s*,\s*\d+)*\s*$')


class Validator:
    """Input parsing for the command line"""

    @staticmethod
    def load_json(path: Optional[str] = None):
        """Read JSON from a path, or from stdin when the path is missing or '-'."""
        if path is None or path == '-':
            text = sys.stdin.read()
            source = 'stdin'
        else:
            with open(path, encoding='utf-8') as handle:
                text = handle.read()
            source = path
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON in {source}: {e}") from e
        logger.debug(f"Loaded JSON input from {source}")
        return data

    @staticmethod
    def parse_signature(text: str) -> Signature:
        """'2,1,0' -> Signature((2, 1, 0))"""
        if not isinstance(text, str) or not _SIGNATURE_PATTERN.match(text):
            raise ParseError(f"signature must look like '2,1,0', got {text!r}")
        return Signature(tuple(int(x) for x in text.split(',')))

    @staticmethod
    def parse_spec(items: Sequence[str]) -> CompactificationSpec:
        if not items:
            raise ParseError("a compactification needs at least one signature")
        return CompactificationSpec(tuple(Validator.parse_signature(s) for s in items))

    @staticmethod
    def parse_specs(data) -> List[CompactificationSpec]:
        """[["1,0", "1,1"], ["2,0"]] -> one spec per inner list"""
        if not isinstance(data, list) or any(not isinstance(s, list) for s in data):
            raise ParseError("specs must be a list of signature lists")
        return [Validator.parse_spec(s) for s in data]

    @staticmethod
    def parse_curve(data) -> LaurentMatrix:
        if isinstance(data, dict) and 'curve' in data:
            data = data['curve']
        return LaurentMatrix.from_dict(data)

    @staticmethod
    def parse_matrix(data) -> RationalMatrix:
        if isinstance(data, dict) and 'matrix' in data:
            data = data['matrix']
        return RationalMatrix.from_dict(data)

    @staticmethod
    def parse_relation(data) -> LinearRelation:
        if isinstance(data, dict) and 'relation' in data:
            data = data['relation']
        return LinearRelation.from_dict(data)

    @staticmethod
    def parse_hinge_terms(data):
        """(n, terms) without axiom checks; the hinge service validates."""
        return Hinge.parse_terms(data)

    @staticmethod
    def is_point(data) -> bool:
        return isinstance(data, dict) and 'type' in data

    @staticmethod
    def parse_point(data):
        return point_from_dict(data)

    @staticmethod
    def require_keys(data, *keys):
        if not isinstance(data, dict):
            raise ParseError(f"input must be an object with keys {', '.join(keys)}")
        missing = [k for k in keys if k not in data]
        if missing:
            raise ParseError(f"input is missing {', '.join(missing)}")
        return data

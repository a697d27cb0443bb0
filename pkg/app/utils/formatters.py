"""
Output Formatting Utilities
"""
import json
from typing import Any, Dict, List

import pandas as pd

from app.config.constants import (
    CMD_EXPONENTS, CMD_FACTOR, CMD_HINGE_CHECK, CMD_HINGE_MUL, CMD_LAMBDA, CMD_LIMIT_GLUED,
    CMD_LIMIT_HINGE, CMD_PROJECT, CMD_REP, CMD_REP_LIMIT, CMD_SELFTEST, CMD_SEPARATE, CMD_URCHIN,
    REPORT_EXPONENTS_HEADER, REPORT_FACTOR_HEADER, REPORT_GLUED_HEADER, REPORT_HINGE_HEADER,
    REPORT_LAMBDA_HEADER, REPORT_PROJECT_HEADER, REPORT_REP_HEADER, REPORT_SELFTEST_HEADER,
    REPORT_SEPARATE_HEADER, REPORT_URCHIN_HEADER,
)

_SCALARS = (str, int, float, bool, type(None))


def _is_scalar_table(value) -> bool:
    return (
        isinstance(value, list) and bool(value)
        and all(isinstance(r, list) for r in value)
        and all(isinstance(x, _SCALARS) for r in value for x in r)
    )


def _is_laurent_table(value) -> bool:
    return (
        isinstance(value, list) and bool(value)
        and all(isinstance(r, list) for r in value)
        and all(isinstance(x, list) and all(isinstance(t, list) and len(t) == 2 for t in x) for r in value for x in r)
        and any(x for r in value for x in r)
    )


def _is_records(value) -> bool:
    return (
        isinstance(value, list) and bool(value)
        and all(isinstance(r, dict) for r in value)
        and all(all(isinstance(x, _SCALARS) for x in r.values()) for r in value)
    )


def format_laurent_pairs(pairs) -> str:
    if not pairs:
        return "0"
    terms = []
    for exponent, coefficient in pairs:
        if exponent == 0:
            terms.append(f"{coefficient}")
        elif exponent == 1:
            terms.append(f"{coefficient}*z")
        else:
            terms.append(f"{coefficient}*z^{exponent}")
    return " + ".join(terms)


class Formatter:
    """JSON and text renderers; text is always derived from the JSON payload"""

    @staticmethod
    def to_json(payload: Any) -> str:
        return json.dumps(payload, separators=(',', ':'), ensure_ascii=False)

    @staticmethod
    def matrix_frame(rows: List[list]) -> pd.DataFrame:
        return pd.DataFrame(rows, dtype=object)

    @staticmethod
    def header(command: str, payload: Dict[str, Any]) -> str:
        p = payload if isinstance(payload, dict) else {}
        if command == CMD_EXPONENTS:
            return REPORT_EXPONENTS_HEADER.format(n=len(p.get('m', [])))
        if command == CMD_FACTOR:
            return REPORT_FACTOR_HEADER.format(precision=p.get('precision'))
        if command in (CMD_LIMIT_HINGE, CMD_HINGE_CHECK):
            hinge = p.get('hinge', p)
            return REPORT_HINGE_HEADER.format(n=hinge.get('n'), alpha=p.get('alpha'))
        if command in (CMD_LIMIT_GLUED, CMD_HINGE_MUL):
            return REPORT_GLUED_HEADER.format(n=p.get('n'))
        if command == CMD_LAMBDA:
            return REPORT_LAMBDA_HEADER.format(k_in=p.get('k_in', '*'), k_out=p.get('k_out', '*'))
        if command in (CMD_REP, CMD_REP_LIMIT):
            return REPORT_REP_HEADER.format(signature=p.get('signature'), dim=p.get('dim'))
        if command == CMD_URCHIN:
            return REPORT_URCHIN_HEADER.format(kind=p.get('type'))
        if command == CMD_PROJECT:
            return REPORT_PROJECT_HEADER.format(n=p.get('n'), signatures=" + ".join(p.get('signatures', [])))
        if command == CMD_SEPARATE:
            return REPORT_SEPARATE_HEADER.format(count=len(p.get('specs', [])))
        if command == CMD_SELFTEST:
            return REPORT_SELFTEST_HEADER.format(seed=p.get('seed'), samples=p.get('samples'))
        return command.upper()

    @staticmethod
    def _lines(value: Any, label: str, indent: int) -> List[str]:
        pad = "  " * indent
        if _is_scalar_table(value):
            table = Formatter.matrix_frame(value).to_string(index=False, header=False)
            return [f"{pad}{label}:"] + [f"{pad}  {line}" for line in table.splitlines()]
        if _is_laurent_table(value):
            cells = [[format_laurent_pairs(x) for x in r] for r in value]
            table = Formatter.matrix_frame(cells).to_string(index=False, header=False)
            return [f"{pad}{label}:"] + [f"{pad}  {line}" for line in table.splitlines()]
        if _is_records(value):
            table = pd.DataFrame(value).to_string(index=False)
            return [f"{pad}{label}:"] + [f"{pad}  {line}" for line in table.splitlines()]
        if isinstance(value, dict):
            lines = [f"{pad}{label}:"] if label else []
            for key, item in value.items():
                lines.extend(Formatter._lines(item, str(key), indent + (1 if label else 0)))
            return lines
        if isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value):
            lines = [f"{pad}{label}:"]
            for i, item in enumerate(value):
                lines.extend(Formatter._lines(item, f"[{i}]", indent + 1))
            return lines
        if isinstance(value, list):
            return [f"{pad}{label}: " + ", ".join(str(x) for x in value)]
        return [f"{pad}{label}: {value}"]

    @staticmethod
    def to_text(command: str, payload: Any) -> str:
        lines = [Formatter.header(command, payload), "=" * 40]
        lines.extend(Formatter._lines(payload, "", 0) if isinstance(payload, dict)
                     else Formatter._lines(payload, "result", 0))
        return "\n".join(lines)

    @staticmethod
    def render(command: str, payload: Any, output_format: str = 'json') -> str:
        if output_format == 'text':
            return Formatter.to_text(command, payload)
        return Formatter.to_json(payload)

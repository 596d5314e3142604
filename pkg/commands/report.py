# commands/report.py

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any

from diagram import Diagram, parse_diagram
from errors import ParseError
from fan import Fan, base_diagram, parse_fan
from utils import digest, iter_lines

logger = logging.getLogger(__name__)


@dataclass
class RunReport:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    status: int = 0

    def add_input(self, path: str, data: bytes) -> None:
        self.inputs[path] = digest(data)

    def as_dict(self) -> dict[str, Any]:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'results': self.results,
            'status': self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=False, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"input {path}: {sha}" for path, sha in self.inputs.items()]
        lines += _flatten(self.results)
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == 'json' else self.to_text()


def _flatten(value: Any, prefix: str = '') -> list[str]:
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            lines += _flatten(item, f"{prefix}.{key}" if prefix else str(key))
        return lines
    if isinstance(value, (list, tuple)):
        if all(not isinstance(item, (dict, list, tuple)) for item in value):
            return [f"{prefix}: {', '.join(str(item) for item in value)}"]
        lines = []
        for index, item in enumerate(value, start=1):
            lines += _flatten(item, f"{prefix}[{index}]")
        return lines
    if isinstance(value, str) and '\n' in value:
        return [f"{prefix}:"] + [f"  {line}" for line in value.rstrip('\n').split('\n')]
    return [f"{prefix}: {value}"]


def read_input(path: str, report: RunReport) -> str:
    """Read a text input and record its digest on the report."""
    if not os.path.isfile(path):
        raise ParseError(f"cannot read '{path}'")
    with open(path, 'rb') as handle:
        data = handle.read()
    report.add_input(path, data)
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise ParseError(f"'{path}' is not UTF-8 text: {e}")


def input_kind(text: str) -> str:
    """'fan' or 'diagram', from the header keyword."""
    for lineno, tokens in iter_lines(text):
        if tokens[0] in ('fan', 'diagram'):
            return tokens[0]
        if tokens[0] != 'format':
            break
    raise ParseError("input is empty or starts with neither 'fan' nor 'diagram'", 1, 1)


def load_diagram(path: str, report: RunReport) -> Diagram:
    """A diagram file, or the base diagram of a fan file."""
    text = read_input(path, report)
    if input_kind(text) == 'fan':
        return base_diagram(parse_fan(text))
    return parse_diagram(text)


def load_fan(path: str, report: RunReport) -> Fan:
    return parse_fan(read_input(path, report))


def write_output(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)
    logger.info(f"Wrote {path}")

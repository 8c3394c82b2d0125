"""Machine-readable check reports shared by the command-line tools."""
from __future__ import annotations

import configparser
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from . import __version__

PROVENANCE = ("published", "derived", "trivial", "plumbing")


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, label: str, computed: Any, expected: Any, provenance: str,
              ok: bool | None = None) -> bool:
        """Append a record; ``ok`` defaults to computed == expected."""
        if provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {provenance!r}")
        ok = (computed == expected) if ok is None else ok
        self.records.append({
            "label": label,
            "computed": _jsonable(computed),
            "expected": _jsonable(expected),
            "provenance": provenance,
            "status": "PASS" if ok else "FAIL",
        })
        return ok

    @property
    def invocation(self) -> str:
        flags = []
        for k, v in self.inputs.items():
            if v is None or v is False:
                continue
            flag = f"--{k.replace('_', '-')}"
            flags.append(flag if v is True else f"{flag} {v}")
        return " ".join([self.command] + flags)

    def extend(self, other: "Report"):
        key = other.invocation
        for r in other.records:
            self.records.append(dict(r, label=f"{key}: {r['label']}"))
        self.data[key] = other.data

    @property
    def status(self) -> str:
        return "PASS" if all(r["status"] == "PASS" for r in self.records) else "FAIL"

    def to_json(self) -> dict:
        return {
            "tool": "gmdeg",
            "version": __version__,
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "records": self.records,
            "data": _jsonable(self.data),
            "status": self.status,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    return str(x)


def schema() -> dict:
    return json.loads(resources.files("gmdeg").joinpath("report.schema.json").read_text())


def load_defaults(path: str | Path | None = None) -> dict[str, int]:
    """Read ``key = value`` lines (integers) from the defaults file."""
    if path is None:
        text = resources.files("gmdeg").joinpath("defaults.cfg").read_text()
    else:
        text = Path(path).read_text()
    parser = configparser.ConfigParser()
    parser.read_string("[defaults]\n" + text)
    return {k: int(v) for k, v in parser["defaults"].items()}

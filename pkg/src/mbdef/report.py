"""Run reports, their JSON/table rendering, and golden-file comparison."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import coeffs
from .algebra import AlgebraElement, dumps, element_to_json
from .errors import GoldenMissingError


def element_output(a: AlgebraElement) -> list[dict]:
    """Elements are stored as term records so golden diffs can name monomials."""
    return element_to_json(a)


def _is_terms(v) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, dict) and set(r) == {"coeff", "mono"} for r in v)


def _mono_text(mono) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono) or "1"


def terms_text(records) -> str:
    if not records:
        return "0"
    parts = []
    for r in records:
        c = coeffs.decode(r["coeff"])
        m = _mono_text(r["mono"])
        cs = coeffs.format_coeff(c)
        if m == "1":
            parts.append(cs)
        else:
            parts.append(m if cs == "1" else f"-{m}" if cs == "-1" else f"{cs}*{m}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class RunReport:
    command: str = ""
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    annotations: dict = field(default_factory=dict)

    @property
    def inputs_digest(self) -> str:
        return hashlib.sha256(dumps(self.inputs).encode()).hexdigest()[:16]

    @property
    def passed(self) -> bool:
        return all(bool(v) for v in self.checks.values())

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "inputs_digest": self.inputs_digest,
            "outputs": self.outputs,
            "checks": self.checks,
            "annotations": self.annotations,
            "passed": self.passed,
        }

    @classmethod
    def from_json(cls, d: dict) -> "RunReport":
        return cls(d.get("command", ""), d.get("inputs", {}), d.get("outputs", {}), d.get("checks", {}),
                   d.get("annotations", {}))


def emit(report: RunReport, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(report.to_json())
    if fmt == "table":
        return _table(report)
    raise ValueError(f"unknown format {fmt!r}")


def _flat(prefix, v, rows):
    if _is_terms(v):
        rows.append((prefix, terms_text(v)))
    elif isinstance(v, dict):
        if not v:
            rows.append((prefix, "{}"))
        for k in sorted(v):
            _flat(f"{prefix}.{k}" if prefix else str(k), v[k], rows)
    elif isinstance(v, list) and v and all(_is_terms(x) for x in v):
        for i, x in enumerate(v):
            rows.append((f"{prefix}[{i}]", terms_text(x)))
    else:
        rows.append((prefix, json.dumps(v, sort_keys=True)))


def _table(report: RunReport) -> str:
    lines = [f"command: {report.command or '-'}", f"inputs:  {report.inputs_digest}"]
    for section in ("inputs", "outputs", "annotations"):
        rows = []
        _flat("", getattr(report, section), rows)
        if rows and getattr(report, section):
            lines.append(f"[{section}]")
            w = max(len(k) for k, _ in rows)
            lines.extend(f"  {k.ljust(w)}  {v}" for k, v in rows)
    if report.checks:
        lines.append("[checks]")
        for k in sorted(report.checks):
            lines.append(f"  {'PASS' if report.checks[k] else 'FAIL'}  {k}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


# -- golden files ---------------------------------------------------------------------


@dataclass
class GoldenResult:
    path: str
    passed: bool
    diffs: list[str] = field(default_factory=list)
    blessed: bool = False

    def to_json(self):
        return {"path": self.path, "passed": self.passed, "diffs": self.diffs, "blessed": self.blessed}


def diff_json(a, b, path: str = "") -> list[str]:
    """Structural differences; term lists are compared monomial by monomial."""
    if _is_terms(a) or _is_terms(b):
        if isinstance(a, list) and isinstance(b, list) and all(_is_terms(x) or x == [] for x in (a, b)):
            ma = {_mono_text(r["mono"]): r["coeff"] for r in a}
            mb = {_mono_text(r["mono"]): r["coeff"] for r in b}
            out = []
            for m in sorted(set(ma) | set(mb)):
                ca, cb = ma.get(m), mb.get(m)
                if ca != cb:
                    fa = coeffs.format_coeff(coeffs.decode(ca)) if ca else "0"
                    fb = coeffs.format_coeff(coeffs.decode(cb)) if cb else "0"
                    out.append(f"{path}: coefficient of {m}: {fa} != {fb}")
            return out
    if isinstance(a, dict) and isinstance(b, dict):
        out = []
        for k in sorted(set(a) | set(b), key=str):
            p = f"{path}.{k}" if path else str(k)
            if k not in a:
                out.append(f"{p}: missing in current")
            elif k not in b:
                out.append(f"{p}: missing in golden")
            else:
                out.extend(diff_json(a[k], b[k], p))
        return out
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            return [f"{path}: length {len(a)} != {len(b)}"]
        out = []
        for i, (x, y) in enumerate(zip(a, b)):
            out.extend(diff_json(x, y, f"{path}[{i}]"))
        return out
    return [] if a == b and type(a) is type(b) else [f"{path}: {a!r} != {b!r}"]


def golden_compare(report: RunReport, golden_path, bless: bool = False) -> GoldenResult:
    """Compare against a stored report; ``bless`` writes the current report first."""
    p = Path(golden_path)
    current = json.loads(emit(report, "json"))
    if bless:
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(emit(report, "json"))
        return GoldenResult(str(p), True, [], True)
    if not p.exists():
        raise GoldenMissingError(f"golden file {p} does not exist (use --bless to create it)")
    golden = json.loads(p.read_text())
    diffs = diff_json(current, golden)
    return GoldenResult(str(p), not diffs, diffs)

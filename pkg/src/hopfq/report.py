"""Check results and suite reports shared by every verification module.

A Report is a flat list of named checks, each pass/fail/skipped/vacuous,
with an optional witness (the first counterexample in a fixed sweep
order).  All data is JSON-serializable; rationals render as "p/q".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
VACUOUS = "vacuous"


def jsonable(obj):
    """Convert witness data to plain JSON types (Fraction -> "p/q")."""
    if isinstance(obj, Fraction):
        return "%d/%d" % (obj.numerator, obj.denominator)
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return str(obj)


@dataclass
class Check:
    name: str
    status: str
    witness: object = None
    elapsed_ms: float = 0.0

    def to_dict(self, deterministic=False):
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = jsonable(self.witness)
        if not deterministic:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


@dataclass
class Report:
    suite: str
    n: int = None
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=None, elapsed_ms=0.0):
        status = PASS if ok else FAIL
        self.checks.append(Check(name, status, None if ok else witness, elapsed_ms))
        return ok

    def record(self, name, status, witness=None, elapsed_ms=0.0):
        self.checks.append(Check(name, status, witness, elapsed_ms))

    def extend(self, other):
        self.checks.extend(other.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def ok(self):
        return all(c.status in (PASS, VACUOUS, SKIPPED) for c in self.checks)

    @property
    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIPPED: 0, VACUOUS: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_dict(self, deterministic=False):
        return {
            "suite": self.suite,
            "n": self.n,
            "checks": [c.to_dict(deterministic) for c in self.checks],
            "counts": self.counts,
        }

    def to_json(self, deterministic=False):
        return json.dumps(self.to_dict(deterministic), indent=2, sort_keys=False)

    def text(self, deterministic=False):
        lines = []
        head = self.suite if self.n is None else "%s (n=%d)" % (self.suite, self.n)
        lines.append("== %s" % head)
        for c in self.checks:
            mark = {PASS: "PASS", FAIL: "FAIL", SKIPPED: "SKIP", VACUOUS: "VAC "}[c.status]
            line = "%s  %s" % (mark, c.name)
            if c.witness is not None:
                line += "  witness=%s" % json.dumps(jsonable(c.witness))
            if not deterministic and c.status != SKIPPED:
                line += "  [%.1f ms]" % c.elapsed_ms
            lines.append(line)
        cnt = self.counts
        lines.append("-- %d pass, %d fail, %d skipped, %d vacuous"
                     % (cnt[PASS], cnt[FAIL], cnt[SKIPPED], cnt[VACUOUS]))
        return "\n".join(lines)


def timed(report, name, fn):
    """Run fn() -> (ok, witness) or bool, record as a timed check."""
    import time
    t0 = time.perf_counter()
    out = fn()
    dt = (time.perf_counter() - t0) * 1000.0
    if isinstance(out, tuple):
        ok, witness = out
    else:
        ok, witness = out, None
    report.add(name, ok, witness, dt)
    return ok

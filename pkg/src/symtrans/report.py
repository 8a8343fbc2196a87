"""Verification reports with deterministic structured rendering.

Structured output is line-delimited JSON with a version field: a header
record, one record per verdict, and a summary record.  For a fixed
(command, inputs, seed, trials) the structured bytes are identical across
runs, so timings appear only in the text rendering.
"""

import json
import time
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class Verdict:
    name: str
    passed: bool
    witness: dict | None = None
    data: dict = field(default_factory=dict)


@dataclass
class Report:
    command: str
    seed: int | None = None
    trials: int | None = None
    inputs: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float | None = None

    def add(self, name: str, passed: bool, witness: dict | None = None, **data) -> None:
        self.verdicts.append(Verdict(name=name, passed=passed, witness=witness, data=data))

    def finish(self) -> "Report":
        if self.elapsed is None:
            self.elapsed = time.perf_counter() - self.started
        return self

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    # -- rendering --------------------------------------------------------

    def to_structured(self) -> str:
        def dump(record):
            return json.dumps(record, sort_keys=True, separators=(",", ":"))

        lines = [dump({
            "record": "header",
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "seed": self.seed,
            "trials": self.trials,
            "inputs": self.inputs,
        })]
        for v in self.verdicts:
            lines.append(dump({
                "record": "verdict",
                "name": v.name,
                "status": "pass" if v.passed else "fail",
                "witness": v.witness,
                **({"data": v.data} if v.data else {}),
            }))
        lines.append(dump({
            "record": "summary",
            "status": "pass" if self.passed else "fail",
            "checks": len(self.verdicts),
            "failures": sum(1 for v in self.verdicts if not v.passed),
            "data": self.data,
        }))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"symtrans {self.command}"
                 + (f"  seed={self.seed}" if self.seed is not None else "")
                 + (f"  trials={self.trials}" if self.trials is not None else "")]
        for key, value in self.inputs.items():
            lines.append(f"  input {key}: {value}")
        for v in self.verdicts:
            status = "PASS" if v.passed else "FAIL"
            extra = ""
            if v.data:
                extra = "  " + " ".join(f"{k}={v.data[k]}" for k in sorted(v.data))
            lines.append(f"  [{status}] {v.name}{extra}")
            if v.witness:
                lines.append(f"         witness: {json.dumps(v.witness, sort_keys=True)}")
        for key in sorted(self.data):
            lines.append(f"  {key} = {self.data[key]}")
        verdict = "all checks passed" if self.passed else "FAILURES PRESENT"
        timing = f" ({self.elapsed:.3f}s)" if self.elapsed is not None else ""
        lines.append(f"  {verdict}{timing}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_structured() if fmt == "structured" else self.to_text()

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from automata import show_word
from synthesis import ExtensionStep
from utils.errors import InvalidRequestError, ParseError
from verify import Counterexample, Verdict


class Report:
    """Flat ``key=value`` document, printed with keys sorted.

    Verdicts are ``true``/``false``; a false verdict is followed by its
    witness under ``<key>.witness.*`` (or ``witness.*`` for the primary
    verdict of a single check). Words are event names separated by single
    spaces.
    """

    def __init__(self, values: Mapping[str, str] | None = None):
        self._values: dict[str, str] = dict(values or {})

    def __getitem__(self, key: str) -> str:
        return self._values[key]

    def __contains__(self, key: object) -> bool:
        return key in self._values

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Report) and self._values == other._values

    def __repr__(self) -> str:
        return f"Report({len(self._values)} fields)"

    def get(self, key: str, default: str | None = None) -> str | None:
        return self._values.get(key, default)

    def set(self, key: str, value: object) -> None:
        if not key or "=" in key or any(c.isspace() for c in key):
            raise InvalidRequestError(f"Invalid report key {key!r}")
        text = str(value).lower() if isinstance(value, bool) else str(value)
        if "\n" in text:
            raise InvalidRequestError(f"Report value for {key!r} spans several lines")
        self._values[key] = text

    def update(self, values: Mapping[str, object]) -> None:
        for key, value in values.items():
            self.set(key, value)

    def add_verdict(self, key: str, verdict: Verdict, primary: bool = False) -> None:
        self.set(key, verdict.holds)
        if verdict.note:
            self.set(f"{key}.note", verdict.note)
        if not verdict.holds and verdict.counterexample is not None:
            self.add_witness("witness" if primary else f"{key}.witness", verdict.counterexample)

    def add_witness(self, prefix: str, cex: Counterexample) -> None:
        self.set(f"{prefix}.kind", cex.kind.value)
        self.set(f"{prefix}.s", show_word(cex.word))
        if cex.event is not None:
            self.set(f"{prefix}.event", cex.event)
        if cex.agent is not None:
            self.set(f"{prefix}.agent", cex.agent)
        if cex.group is not None:
            self.set(f"{prefix}.group", cex.group)
        for agent, look in cex.lookalikes:
            self.set(f"{prefix}.lookalike.{agent}", show_word(look))

    def add_provenance(self, steps: Iterable[ExtensionStep]) -> None:
        for n, step in enumerate(steps, start=1):
            prefix = f"provenance.{n:03d}"
            self.set(f"{prefix}.group", step.group)
            self.set(f"{prefix}.event", step.event)
            self.set(f"{prefix}.reason", step.reason)
            self.set(f"{prefix}.witness", show_word(step.witness))

    def to_text(self) -> str:
        return "".join(f"{key}={self._values[key]}\n" for key in sorted(self._values))


def parse_report(text: str, source: str = "<string>") -> Report:
    report = Report()
    for number, line in enumerate(text.split("\n"), start=1):
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected 'key=value', got {line!r}", number, source)
        if key in report:
            raise ParseError(f"key {key!r} given twice", number, source)
        try:
            report.set(key, value)
        except InvalidRequestError as e:
            raise ParseError(str(e), number, source) from e
    return report


def emit_report(report: Report, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as file:
            file.write(report.to_text())
    except OSError as e:
        raise InvalidRequestError(f"Cannot write report {path}: {e}") from e

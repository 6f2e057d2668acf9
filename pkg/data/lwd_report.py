"""
This module contains the report records produced by relation checks and by the
command line, and their JSON form.

Classes:
    RelationEntry: One expected/actual comparison.
    RelationReport: A named group of entries, optionally nested.
    CheckResult: Flattened pass/fail line of a report.
    LwdReport: Everything one CLI run computed about one code.

Every count is written to JSON as a decimal string so that values beyond the
range of a double survive a round trip unchanged.
"""

import json
from dataclasses import dataclass, field

from data.weight_tally import WeightTally
from utility.errors import MatrixFormatError
from utility.logger import setup_logger

logger = setup_logger('lwd_report_log')

TALLY_KEYS = ('A', 'L', 'N')


@dataclass
class RelationEntry:
    """
    One exact comparison.

    Attributes:
        label (str): What is compared, e.g. "w=32".
        expected (int): Value the relation predicts.
        actual (int): Value found.
    """
    label: str
    expected: int
    actual: int

    @property
    def passed(self):
        return self.expected == self.actual


@dataclass
class RelationReport:
    """
    The outcome of one relation, made of entries and sub-reports.

    A report passes iff every entry matches exactly and every child passes.
    """
    name: str
    entries: list = field(default_factory=list)
    children: list = field(default_factory=list)

    @property
    def passed(self):
        return all(e.passed for e in self.entries) and all(c.passed for c in self.children)

    def add(self, label, expected, actual):
        self.entries.append(RelationEntry(label, expected, actual))

    def failures(self):
        """Return (report name, entry) pairs for every mismatch, children included."""
        found = [(self.name, e) for e in self.entries if not e.passed]
        for child in self.children:
            found.extend(child.failures())
        return found

    def to_checks(self):
        """Flatten into one CheckResult per leaf report."""
        checks = []
        if self.entries or not self.children:
            bad = [e for e in self.entries if not e.passed]
            if bad:
                detail = '; '.join(f"{e.label}: expected {e.expected}, got {e.actual}" for e in bad)
            else:
                detail = f"{len(self.entries)} comparisons"
            checks.append(CheckResult(self.name, not bad, detail))
        for child in self.children:
            checks.extend(child.to_checks())
        return checks

    def summary_lines(self):
        lines = []
        for check in self.to_checks():
            lines.append(f"[{'PASS' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
        return lines


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ''

    def to_dict(self):
        return {'name': self.name, 'pass': self.passed, 'detail': self.detail}

    @classmethod
    def from_dict(cls, data):
        return cls(data['name'], bool(data['pass']), data.get('detail', ''))


@dataclass
class LwdReport:
    """
    Represents the result of one command line computation.

    Attributes:
        descriptor (str): Family and parameters, or the source file.
        n (int): Code length.
        k (int): Code dimension.
        mode (str): brute, shortcut, cosets or the relation applied.
        tallies (dict): Any of 'A', 'L', 'N' mapped to a WeightTally.
        checks (list): CheckResult records.
        duration_ms (int): Wall-clock time of the computation.
    """
    descriptor: str
    n: int
    k: int
    mode: str
    tallies: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    duration_ms: int = 0

    def to_dict(self):
        data = {'code': self.descriptor, 'n': self.n, 'k': self.k, 'mode': self.mode}
        for key in TALLY_KEYS:
            if key in self.tallies:
                data[key] = self.tallies[key].to_dict()
        if self.checks:
            data['checks'] = [c.to_dict() for c in self.checks]
        data['duration_ms'] = self.duration_ms
        return data

    @classmethod
    def from_dict(cls, data):
        """
        Rebuild a report from its dictionary form.

        Raises:
            MatrixFormatError: If a required field is missing or a count is not an integer.
        """
        try:
            n = int(data['n'])
            tallies = {key: WeightTally.from_dict(n, data[key]) for key in TALLY_KEYS if key in data}
            return cls(
                descriptor=data.get('code', ''),
                n=n,
                k=int(data['k']) if data.get('k') is not None else None,
                mode=data.get('mode', ''),
                tallies=tallies,
                checks=[CheckResult.from_dict(c) for c in data.get('checks', [])],
                duration_ms=int(data.get('duration_ms', 0)),
            )
        except (KeyError, TypeError, ValueError) as e:
            logger.warning("Rejected report data: %s", e)
            raise MatrixFormatError(f"invalid report: {e}") from e

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MatrixFormatError(f"invalid JSON report: {e}") from e
        if not isinstance(data, dict):
            raise MatrixFormatError("a report must be a JSON object")
        return cls.from_dict(data)


def load_report(path):
    with open(path, 'r', encoding='utf-8') as handle:
        return LwdReport.from_json(handle.read())

# End of data/lwd_report.py

"""
Результаты проверок аудита и их сериализация для хранилища отчётов.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional, Union

MAX_EXAMPLES = 10


@dataclass
class CheckResult:
    """
    Итог одной проверяемой закономерности.

    checked - число проверенных экземпляров, skipped - исключённые бюджетом,
    violations - число нарушений, examples - первые из них в текстовом виде.
    """
    suite: str
    name: str
    checked: int = 0
    skipped: int = 0
    violations: int = 0
    examples: List[str] = field(default_factory=list)
    minimum: int = 0

    def record(self, ok: bool, detail: Union[str, Callable[[], str]] = '') -> bool:
        """detail может быть функцией: текст строится только при нарушении"""
        self.checked += 1
        if not ok:
            self.violations += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(detail() if callable(detail) else detail)
        return ok

    def skip(self, count: int = 1) -> None:
        self.skipped += count

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.checked >= self.minimum

    def summary(self) -> str:
        text = f"{self.name}: проверено {self.checked}, пропущено {self.skipped}, нарушений {self.violations}"
        if self.checked < self.minimum:
            text += f" (требуется не менее {self.minimum} экземпляров)"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'name': self.name,
            'checked': self.checked,
            'skipped': self.skipped,
            'violations': self.violations,
            'examples': list(self.examples),
            'passed': self.passed,
        }


@dataclass
class AuditReport:
    suite: str
    max_norm: int
    seed: int
    checks: List[CheckResult] = field(default_factory=list)
    created_at: str = field(default_factory=lambda: datetime.now().isoformat(timespec='seconds'))
    report_id: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self) -> int:
        return sum(c.violations for c in self.checks)

    def failed_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'id': self.report_id,
            'created_at': self.created_at,
            'suite': self.suite,
            'max_norm': self.max_norm,
            'seed': self.seed,
            'passed': self.passed,
            'checks': [c.to_dict() for c in self.checks],
        }

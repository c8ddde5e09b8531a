import time
from typing import Any, Dict, List, Optional
from collections import defaultdict


class SuiteMetricsCollector:
    """Collects per-suite case counts, violations and timings for a verification run."""

    def __init__(self):
        """Initialize metrics collector."""
        self.case_counts: Dict[str, int] = defaultdict(int)
        self.violation_counts: Dict[str, int] = defaultdict(int)
        self.elapsed: Dict[str, float] = {}
        self.examples: Dict[str, List[str]] = defaultdict(list)
        self.max_examples = 3
        self._started: Dict[str, float] = {}
        self._order: List[str] = []

    def start_suite(self, name: str) -> None:
        """Mark the start of a suite.

        Args:
            name: Suite name
        """
        if name not in self._started:
            self._order.append(name)
        self._started[name] = time.monotonic()

    def finish_suite(self, name: str) -> float:
        """Mark the end of a suite.

        Returns:
            Seconds spent in the suite
        """
        started = self._started.get(name)
        if started is None:
            raise KeyError(f"Suite {name!r} was never started")
        self.elapsed[name] = time.monotonic() - started
        return self.elapsed[name]

    def record_case(self, name: str, ok: bool, detail: Optional[str] = None) -> None:
        """Record one checked case.

        Args:
            name: Suite name
            ok: Whether the property held
            detail: Description kept for the first few violations
        """
        if name not in self._started:
            self._order.append(name)
            self._started[name] = time.monotonic()
        self.case_counts[name] += 1
        if not ok:
            self.violation_counts[name] += 1
            if detail and len(self.examples[name]) < self.max_examples:
                self.examples[name].append(detail)

    def suite_names(self) -> List[str]:
        return list(self._order)

    def get_metrics(self) -> Dict[str, Any]:
        """Get totals across suites.

        Returns:
            Dictionary of metrics
        """
        total_cases = sum(self.case_counts.values())
        total_violations = sum(self.violation_counts.values())
        failing = [name for name in self._order if self.violation_counts.get(name, 0)]
        return {
            "suites": len(self._order),
            "total_cases": total_cases,
            "total_violations": total_violations,
            "failing_suites": failing,
            "total_elapsed": sum(self.elapsed.values()),
            "slowest_suite": max(self.elapsed, key=self.elapsed.get, default=None)
        }

    def get_violation_distribution(self) -> Dict[str, float]:
        """Share of all violations contributed by each suite."""
        total = sum(self.violation_counts.values())
        if total == 0:
            return {}
        return {
            name: count / total
            for name, count in self.violation_counts.items()
            if count
        }

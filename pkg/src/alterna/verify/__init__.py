"""Independent verification: concrete models, coset enumeration, suites."""

from .suites import DEFAULT_CORPUS, SUITES, SuiteReport, run_suite

__all__ = ["DEFAULT_CORPUS", "SUITES", "SuiteReport", "run_suite"]

from enum import Enum


class SuiteStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"


class ExitCode(int, Enum):
    OK = 0
    ASSERTION_FAILED = 1
    USAGE_ERROR = 2

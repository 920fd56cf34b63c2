from src.structs.corpus import CorpusSpec
from src.structs.couples import (
    CesLowerBounds,
    CoupleKind,
    CoupleSpec,
    Decomposition,
    KCurve,
    KMethod,
    KTail,
    TailKind,
    TGridSpec,
)
from src.structs.domain import Domain, DomainKind, Seq, StepFunction, TauPair, merge_meshes
from src.structs.families import FhFamily, FhRatio, FsFamily, FsRow
from src.structs.piecewise import PiecewiseSmooth
from src.structs.reports import AssertionSummary, FailureRecord, RatioRange, Report
from src.structs.requests import (
    CoupleRequest,
    FunctionPayload,
    KCurveRequest,
    KCurveResponse,
    KCurveRow,
    NormKind,
    NormRequest,
    NormResponse,
    VerifyRequest,
)
from src.structs.status import ExitCode, SuiteStatus
from src.structs.suites import SUITE_ALIASES, SuiteConfig, SuiteName
from src.structs.weights import (
    QuadConfig,
    SeqSpace,
    SeqSpaceKind,
    Weight,
    WeightKind,
)

__all__ = [
    "AssertionSummary",
    "CesLowerBounds",
    "CorpusSpec",
    "CoupleKind",
    "CoupleRequest",
    "CoupleSpec",
    "Decomposition",
    "Domain",
    "DomainKind",
    "ExitCode",
    "FailureRecord",
    "FhFamily",
    "FhRatio",
    "FsFamily",
    "FsRow",
    "FunctionPayload",
    "KCurve",
    "KCurveRequest",
    "KCurveResponse",
    "KCurveRow",
    "KMethod",
    "KTail",
    "NormKind",
    "NormRequest",
    "NormResponse",
    "PiecewiseSmooth",
    "QuadConfig",
    "RatioRange",
    "Report",
    "Seq",
    "SeqSpace",
    "SeqSpaceKind",
    "SUITE_ALIASES",
    "StepFunction",
    "SuiteConfig",
    "SuiteName",
    "SuiteStatus",
    "TGridSpec",
    "TailKind",
    "TauPair",
    "VerifyRequest",
    "Weight",
    "WeightKind",
    "merge_meshes",
]

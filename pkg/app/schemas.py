"""
Report models for the command-line front end

Every report carries "schema": 1. JSON rendering sorts keys so identical
flags give identical bytes.
"""
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.version import REPORT_SCHEMA_VERSION


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=REPORT_SCHEMA_VERSION, alias="schema")
    command: str


class BasisMonomial(BaseModel):
    h: int
    k: int
    l: int
    m: int


class Term(BasisMonomial):
    coef: str = Field(description="Scalar or rational in the num/den text grammar")


class WeightModel(BaseModel):
    p: int
    q: int


class LMCoefficient(BaseModel):
    l: int
    m: int
    coef: str


class Candidate(BaseModel):
    weight: WeightModel
    coefficients: List[LMCoefficient]
    vector: List[Term]


class LevelModel(BaseModel):
    p: int
    q: int
    verma_dim: int
    submodule_dim: int
    quotient_dim: int
    singular_dim: int
    witness: Optional[List[Term]] = None


class ScanModel(BaseModel):
    name: str
    checked: int
    passed: bool
    violations: List[Dict[str, Any]]


class WeightsReport(Report):
    command: str = "weights"
    p: int
    q: int
    dimension: int
    basis: List[BasisMonomial]


class ActReport(Report):
    command: str = "act"
    generator: str
    monomial: BasisMonomial
    parameters: Dict[str, str]
    result: List[Term]


class SingularReport(Report):
    command: str = "singular"
    p: int
    q: int
    parameters: Dict[str, str]
    weight_dimension: int
    dimension: int = Field(description="Number of independent singular vectors found")
    expected: Optional[str] = Field(default=None, description="'one' or 'none' from the 2d+3 criterion")
    nullspace: List[Candidate]
    matches_closed_form: bool


class GramReport(Report):
    command: str = "gram"
    p: int
    q: int
    parameters: Dict[str, str]
    basis: List[BasisMonomial]
    matrix: List[List[str]]
    symmetric: bool
    det: str
    rational_roots_in_d: Optional[List[str]] = None


class ClassifyReport(Report):
    command: str = "classify"
    d: str
    r: str
    theta: str
    branch: str
    p0: Optional[int] = None
    convention: str
    p0_zero_excluded: bool
    pmax: int
    qmax: int
    levels: List[LevelModel] = Field(default_factory=list)
    hw_power_dependent: Optional[bool] = None
    passed: bool = True


class JacobiReport(Report):
    command: str = "jacobi"
    checked: int
    passed: bool
    violations: List[Dict[str, Any]]
    scans: List[ScanModel]


class ClosedFormReport(Report):
    command: str = "closed-form"
    p: int
    parameters: Dict[str, str]
    vector: List[Term]
    q0_table: List[LMCoefficient]
    matches_q0_table: bool
    annihilated_by: Dict[str, bool]


class RuleResult(BaseModel):
    rule_code: str
    name: str
    passed: bool
    severity: str
    message: str
    details: Dict[str, Any] = Field(default_factory=dict)


class VerifyReport(Report):
    command: str = "verify-theorems"
    status: str
    pmax: int
    qmax: int
    summary: Dict[str, int]
    results: List[RuleResult]


class VersionReport(Report):
    command: str = "version"
    version: str
    engine: Dict[str, Any]
    rules: List[str]


def render_json(report: Report) -> str:
    return json.dumps(report.model_dump(by_alias=True), sort_keys=True, indent=2)

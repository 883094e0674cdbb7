"""
Machine-readable certificates.

Certificates are pydantic models dumped with their declared field order, so identical inputs
give byte-identical JSON. Every conclusion names the checks it depends on and the
mathematical fact that turns those checks into the conclusion.
"""

from typing import Any, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from cutnumber import TOOL_NAME, __version__
from cutnumber.core.checks import Check, Checklist
from cutnumber.utils.errors import CutNumberError

# Facts used to turn computed checks into conclusions.
CITATIONS: Dict[str, str] = {
    "cut_number_definition": (
        "c(X) is the largest n admitting an epimorphism from pi1(X) onto the free group F(n)"
    ),
    "cut_number_bounds": "1 <= c(X) <= beta1(X) whenever beta1(X) >= 1",
    "relative_corank_bound": (
        "c(X, phi) >= 2 forces rank H1(X_phi) >= 1 over Z[t^{+-1}], since the cover of a wedge "
        "of n circles has rank n - 1"
    ),
    "metabelian_obstruction": (
        "an epimorphism onto F/F'' (F free of rank 2) yields a primitive phi with "
        "rank H1(X_phi) >= 1"
    ),
    "cut_number_maximum": "c(X) is the maximum of c(X, phi) over primitive phi",
    "nonsingular_torsion": (
        "a relation matrix nonsingular over Q(t) makes every generator it relates torsion"
    ),
    "pair_sequence": (
        "exact sequence of the pair (W_psi, X_phi): H2(W_psi, X_phi) -> H1(X_phi) -> H1(W_psi), "
        "with H1(W_psi) of rank 0"
    ),
    "quadratic_form": (
        "z^T A(1) z = n_N * sum z_i^2 for A(1) = n_N I + S(1) with S(1) skew-symmetric"
    ),
    "nilpotent_obstruction": (
        "N/N' of F(2)/F_4 over phi = (1, 0) is Z[t^{+-1}]/J^3; an epimorphism onto F/F_4 "
        "would force det A(1) = 0"
    ),
    "lcs_invariance": (
        "the F/F_4 obstruction depends only on the quotient by the fourth lower central term"
    ),
    "betti_obstruction": (
        "an epimorphism onto F/F_4 with F free of rank 2 surjects the abelianization onto "
        "Z^2, impossible when beta1 < 2"
    ),
    "trivial_cover_action": (
        "H1(W_psi) is a sum of copies of Z[t^{+-1}]/J, so every element is (t - 1)-torsion"
    ),
}


class ToolInfo(BaseModel):
    name: str = TOOL_NAME
    version: str = __version__


class CheckRecord(BaseModel):
    """Serialized named check."""

    name: str
    status: str
    detail: Optional[str] = None

    @classmethod
    def from_check(cls, check: Check) -> "CheckRecord":
        return cls(name=check.name, status=check.status.value, detail=check.detail)


class Conclusion(BaseModel):
    """A statement licensed by recorded checks and a cited fact."""

    statement: str
    citation: str
    requires: List[str] = Field(default_factory=list)
    caveat: Optional[str] = None


def conclusion(
    statement: str,
    citation_key: str,
    requires: Sequence[str] = (),
    caveat: Optional[str] = None,
) -> Conclusion:
    """
    Build a conclusion from a known citation.

    Args:
        statement: The concluded fact
        citation_key: Key into ``CITATIONS``
        requires: Names of the checks the conclusion depends on
        caveat: Scope limitation to state next to the conclusion (optional)

    Returns:
        The conclusion
    """
    return Conclusion(
        statement=statement,
        citation=CITATIONS[citation_key],
        requires=list(requires),
        caveat=caveat,
    )


def check_records(checklist: Checklist) -> List[CheckRecord]:
    return [CheckRecord.from_check(c) for c in checklist]


def supported(conclusions: Sequence[Conclusion], checklist: Checklist) -> List[Conclusion]:
    """Keep only the conclusions whose required checks all passed."""
    return [c for c in conclusions if checklist.passed(*c.requires)]


class PhiRank(BaseModel):
    phi: List[int]
    rank: int


class RankCertificate(BaseModel):
    """Alexander-module ranks of infinite cyclic covers for sampled characters."""

    kind: Literal["alexander_rank"] = "alexander_rank"
    tool: ToolInfo = Field(default_factory=ToolInfo)
    presentation_digest: str
    generators: List[str]
    relator_count: int
    beta1: int
    phis: List[PhiRank]
    exhaustive: bool
    seed: Optional[int] = None
    cut_number_bounds: List[int]
    checks: List[CheckRecord]
    conclusions: List[Conclusion]


class FamilyParamsRecord(BaseModel):
    m: int
    n: List[int]
    N: int


class FamilyCertificate(BaseModel):
    """Nonsingularity or F/F_4 certificate for one member of the cut-number-one family."""

    kind: Literal["nonsingularity", "f4_obstruction"]
    tool: ToolInfo = Field(default_factory=ToolInfo)
    params: FamilyParamsRecord
    matrix_jets: List[List[List[int]]]
    s_at_one: List[List[int]]
    a_at_one: List[List[int]]
    det_a_at_one: str
    checks: List[CheckRecord]
    conclusions: List[Conclusion]
    context: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None


class ErrorReport(BaseModel):
    """Structured error object printed by the command line front end."""

    error: str
    message: str
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_exception(cls, exc: Exception) -> "ErrorReport":
        if isinstance(exc, CutNumberError):
            return cls(error=exc.code, message=exc.message, details=dict(exc.details))
        return cls(error="usage", message=str(exc))


def to_json_data(model: BaseModel) -> Dict[str, Any]:
    """Dump a certificate model to JSON-compatible data in declared field order."""
    return model.model_dump(mode="json")

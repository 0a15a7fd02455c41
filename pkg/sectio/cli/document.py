"""The structured result document emitted by every command."""
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from sectio.config.constants import SCHEMA_VERSION
from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable
from sectio.invariants.results import CoverResult
from sectio.subgroups.subgroup import Subgroup, mask_of
from sectio.cli.elaborate import Elaborator

INFINITE_VALUE = "infinite"


class ResultDocument(BaseModel):
    """
    One self-contained record per invocation.

    `witness` holds the member indices of each covering subgroup and
    `sections` the image array of each local section, aligned with it.
    """
    schema_version: str = SCHEMA_VERSION
    command: str
    inputs: Dict[str, str] = Field(default_factory=dict)
    invariant: Optional[str] = None
    value: Optional[Union[int, str]] = None
    reason: Optional[str] = None
    reason_element: Optional[int] = None
    method: Optional[str] = None
    witness: List[List[int]] = Field(default_factory=list)
    sections: List[List[int]] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    budget_status: str = "ok"
    error: Optional[str] = None
    exit_code: int = 0
    timing_seconds: Optional[float] = None

    @classmethod
    def from_result(cls, command: str, invariant: str, result: CoverResult, **fields) -> "ResultDocument":
        return cls(
            command=command,
            invariant=invariant,
            value=result.value if result.is_finite else INFINITE_VALUE,
            reason=result.reason.value if result.reason else None,
            reason_element=result.reason_element,
            method=result.method,
            witness=[list(L.members) for L in result.witness],
            sections=[list(s.images) for s in result.sections],
            **fields,
        )

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE_VALUE

    def deterministic(self) -> Dict[str, Any]:
        """The document without its timing."""
        return self.model_dump(exclude={"timing_seconds"})


def check_witnesses(doc: ResultDocument, group: GroupTable, hom: Optional[Hom] = None) -> bool:
    """
    Re-check the witnesses of a loaded document against the group they
    cover: every subgroup is closed, their union is the group, and each
    section s over L is a homomorphism with hom∘s the inclusion of L.
    """
    union = 0
    subgroups: List[Subgroup] = []
    for members in doc.witness:
        try:
            L = Subgroup(group, mask_of(members))
        except ValueError:
            return False
        if not L.is_proper:
            return False
        subgroups.append(L)
        union |= L.mask
    if doc.witness and union != group.full_mask:
        return False
    if isinstance(doc.value, int) and doc.value != len(doc.witness):
        return False
    if not doc.sections:
        return True
    if hom is None or len(doc.sections) != len(subgroups):
        return False
    for L, images in zip(subgroups, doc.sections):
        try:
            s = Hom(L.as_group(), hom.domain, tuple(images))
        except ValueError:
            return False
        if any(hom.images[s.images[i]] != m for i, m in enumerate(L.members)):
            return False
    return True


def revalidate(doc: ResultDocument, elaborator: Optional[Elaborator] = None) -> bool:
    """
    Re-elaborate the inputs of a loaded document and re-check its witnesses.

    Documents of commands without witnesses validate trivially.
    """
    elaborator = elaborator or Elaborator()
    if doc.error or not doc.witness:
        return True
    if "hom" in doc.inputs:
        f = elaborator.hom(doc.inputs["hom"])
        if doc.command == "sigma-hom":
            return check_witnesses(doc, f.domain)
        return check_witnesses(doc, f.codomain, f)
    return check_witnesses(doc, elaborator.group(doc.inputs["group"]))


def _value_text(doc: ResultDocument) -> str:
    return "infinite" if doc.is_infinite else str(doc.value)


def render_text(doc: ResultDocument, names: Optional[GroupTable] = None) -> str:
    """Human-readable rendering mirroring every field of the document."""
    lines = [f"{doc.command}: " + ", ".join(f"{k}={v}" for k, v in doc.inputs.items())]
    if doc.error:
        lines.append(f"error: {doc.error}")
    if doc.invariant:
        lines.append(f"{doc.invariant} = {_value_text(doc)}")
    if doc.reason:
        element = ""
        if doc.reason_element is not None:
            shown = names.element_name(doc.reason_element) if names else doc.reason_element
            element = f" (element {shown})"
        lines.append(f"reason: {doc.reason}{element}")
    if doc.method:
        lines.append(f"method: {doc.method}")
    for i, members in enumerate(doc.witness):
        shown = [names.element_name(m) for m in members] if names else members
        line = f"  H{i + 1} = {{{', '.join(str(m) for m in shown)}}}"
        if i < len(doc.sections):
            line += f"  section {doc.sections[i]}"
        lines.append(line)
    for key, value in doc.data.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + ", ".join(f"{k}={v}" for k, v in row.items()) for row in value)
        else:
            lines.append(f"{key}: {value}")
    if doc.budget_status != "ok":
        lines.append(f"budget: {doc.budget_status}")
    if doc.timing_seconds is not None:
        lines.append(f"time: {doc.timing_seconds:.3f}s")
    return "\n".join(lines)

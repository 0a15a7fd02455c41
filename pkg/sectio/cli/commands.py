"""
Command implementations. Each command returns a ResultDocument and the
group whose element names the text rendering should use.
"""
from argparse import Namespace
from dataclasses import asdict
from typing import Callable, Dict, List, Optional, Tuple

from sectio import logger
from sectio.cohomology.coboundary import is_coboundary
from sectio.cohomology.cocycle import build_cocycle, restrict_cocycle
from sectio.errors import InvalidParameter
from sectio.groups.homs import Hom
from sectio.groups.structure import element_names, structure_queries
from sectio.groups.table import GroupTable
from sectio.homsearch.points import evaluation_hom, hom_group, is_h_point
from sectio.homsearch.search import generating_sequence
from sectio.homsearch.sections import (exists_global_section,
                                       is_locally_sectionable)
from sectio.invariants.covering import (enumerate_minimum_covers, sigma,
                                        sigma_cyclic)
from sectio.invariants.homcover import sigma_hom
from sectio.invariants.sectional import sec, sectionable_poset
from sectio.subgroups.lattice import generated_subgroup
from sectio.subgroups.subgroup import Subgroup
from sectio.verification.harness import verify_batch, verify_theorems
from sectio.verification.report import VerificationReport
from sectio.cli.catalog import catalog
from sectio.cli.document import ResultDocument
from sectio.cli.elaborate import Elaborator
from sectio.cli.grammar import parse_hom

CommandOutput = Tuple[ResultDocument, Optional[GroupTable]]


def _parse_indices(text: str) -> Tuple[int, ...]:
    body = text.strip().strip("[]")
    try:
        return tuple(int(part) for part in body.split(",") if part.strip())
    except ValueError:
        raise InvalidParameter(f"Expected a list of element indices, got {text!r}") from None


def _hasse(elements: Tuple[Subgroup, ...]) -> List[List[int]]:
    edges = []
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i == j or not a.issubset(b) or a.mask == b.mask:
                continue
            between = any(
                k not in (i, j) and a.issubset(c) and c.issubset(b) and c.mask not in (a.mask, b.mask)
                for k, c in enumerate(elements)
            )
            if not between:
                edges.append([i, j])
    return edges


def _report_data(report: VerificationReport) -> Dict[str, object]:
    return {
        "summary": report.summary(),
        "outcomes": [o.model_dump(mode="json") for o in report.outcomes],
    }


def cmd_sigma(args: Namespace, elab: Elaborator) -> CommandOutput:
    G = elab.group(args.group)
    result = sigma(G)
    doc = ResultDocument.from_result("sigma", "sigma", result, inputs={"group": args.group},
                                     data={"order": G.order})
    return doc, G


def cmd_sigma_cyclic(args: Namespace, elab: Elaborator) -> CommandOutput:
    G = elab.group(args.group)
    result, report = sigma_cyclic(G)
    data = {
        "order": G.order,
        "bound": report.bound,
        "breakdown": [asdict(row) for row in report.breakdown],
    }
    doc = ResultDocument.from_result("sigma-cyclic", "sigma_c", result, inputs={"group": args.group}, data=data)
    return doc, G


def cmd_sec(args: Namespace, elab: Elaborator) -> CommandOutput:
    f = elab.hom(args.hom)
    result = sec(f)
    data = {
        "locally_sectionable": bool(is_locally_sectionable(f)) if f.is_surjective else False,
        "global_section": f.is_surjective and exists_global_section(f) is not None,
    }
    doc = ResultDocument.from_result("sec", "sec", result, inputs={"hom": args.hom}, data=data)
    return doc, f.codomain


def cmd_sigma_hom(args: Namespace, elab: Elaborator) -> CommandOutput:
    f = elab.hom(args.hom)
    result = sigma_hom(f)
    doc = ResultDocument.from_result("sigma-hom", "sigma_hom", result, inputs={"hom": args.hom})
    # sections live over f(G_i) in the codomain, not over the witness subgroups
    doc.sections = []
    doc.data["sections_over_images"] = [list(s.images) for s in result.sections]
    doc.data["splittings"] = [
        {"subgroup": list(sp.subgroup.members), "semidirect": sp.semidirect.group.label,
         "omega": list(sp.omega.images)}
        for sp in result.details
    ]
    return doc, f.domain


def cmd_poset(args: Namespace, elab: Elaborator) -> CommandOutput:
    f = elab.hom(args.hom)
    poset = sectionable_poset(f)
    maximal = set(poset.maximal)
    data = {
        "elements": [
            {"index": i, "members": list(L.members), "order": L.order, "maximal": i in maximal}
            for i, L in enumerate(poset.elements)
        ],
        "hasse": _hasse(poset.elements),
    }
    doc = ResultDocument.from_result("poset", "poset_cover", poset.cover, inputs={"hom": args.hom}, data=data)
    return doc, f.codomain


def cmd_cocycle(args: Namespace, elab: Elaborator) -> CommandOutput:
    f = elab.hom(args.hom)
    transversal, w = build_cocycle(f)
    inputs = {"hom": args.hom}
    if args.subgroup:
        inputs["subgroup"] = args.subgroup
        w = restrict_cocycle(w, generated_subgroup(f.codomain, _parse_indices(args.subgroup)))
    outcome = is_coboundary(w)
    data = {
        "transversal": list(transversal.rep),
        "base_members": list(w.members),
        "kernel_members": list(w.kernel_members),
        "values": w.values.tolist(),
        "coboundary": outcome.is_coboundary,
        "coboundary_method": outcome.method,
        "cochain": list(outcome.cochain) if outcome.cochain else None,
        "section": list(outcome.section.images) if outcome.section else None,
    }
    return ResultDocument(command="cocycle", inputs=inputs, data=data), f.codomain


def cmd_hpoint(args: Namespace, elab: Elaborator) -> CommandOutput:
    G, H = elab.group(args.group), elab.group(args.target)
    a = args.element
    if not 0 <= a < G.order:
        raise InvalidParameter(f"Element {a} out of range for {G.label}")
    data = {"element": G.element_name(a), "h_point": is_h_point(G, H, a)}
    if H.is_abelian:
        ev = evaluation_hom(hom_group(G, H), a)
        data["evaluation_surjective"] = ev.is_surjective
        data["sec_evaluation"] = sec(ev).display_value()
    inputs = {"group": args.group, "target": args.target, "element": str(a)}
    return ResultDocument(command="hpoint", inputs=inputs, data=data), G


def cmd_covers(args: Namespace, elab: Elaborator) -> CommandOutput:
    G = elab.group(args.group)
    result = sigma(G)
    covers = enumerate_minimum_covers(G) if result.is_finite else []
    doc = ResultDocument.from_result("covers", "sigma", result, inputs={"group": args.group},
                                     data={"covers": [[list(L.members) for L in c] for c in covers]})
    if covers:
        doc.witness = [list(L.members) for L in covers[0]]
    return doc, G


def cmd_verify(args: Namespace, elab: Elaborator) -> CommandOutput:
    f = elab.hom(args.hom)
    report = verify_theorems([(parse_hom(args.hom).pretty(), f)])
    doc = ResultDocument(command="verify", inputs={"hom": args.hom}, data=_report_data(report))
    doc.exit_code = 1 if report.has_failures else 0
    return doc, None


def cmd_verify_batch(args: Namespace, elab: Elaborator) -> CommandOutput:
    report = verify_batch(max_order=args.max_order, jobs=args.jobs)
    inputs = {"max_order": str(args.max_order or "")}
    doc = ResultDocument(command="verify-batch", inputs=inputs, data=_report_data(report))
    if report.failures():
        doc.data["failures"] = [o.model_dump(mode="json") for o in report.failures()]
        doc.exit_code = 1
    return doc, None


def _finite_sec_no_global_section(f: Hom) -> bool:
    return sec(f).is_finite and exists_global_section(f) is None


def _sec_exceeds_sigma(f: Hom) -> bool:
    return f.is_surjective and sigma(f.codomain).is_finite and sec(f).value > sigma(f.codomain).value


def _sigma_equals_sigma_cyclic(f: Hom) -> bool:
    H = f.codomain
    return not H.is_cyclic and sigma(H).value == sigma_cyclic(H)[0].value


def _not_locally_sectionable_epi(f: Hom) -> bool:
    return f.is_surjective and not is_locally_sectionable(f)


def _sec_exceeds_sigma_hom(f: Hom) -> bool:
    return f.is_surjective and sec(f).value > sigma_hom(f).value


PREDICATES: Dict[str, Callable[[Hom], bool]] = {
    "finite-sec-no-global-section": _finite_sec_no_global_section,
    "sec-exceeds-sigma": _sec_exceeds_sigma,
    "sigma-equals-sigma-cyclic": _sigma_equals_sigma_cyclic,
    "not-locally-sectionable-epi": _not_locally_sectionable_epi,
    "sec-exceeds-sigma-hom": _sec_exceeds_sigma_hom,
}


def cmd_search(args: Namespace, elab: Elaborator) -> CommandOutput:
    predicate = PREDICATES[args.predicate]
    cat = catalog(args.max_order)
    matches = [key for key, f in cat.homs if predicate(f)]
    logger.info(f"{args.predicate}: {len(matches)} of {len(cat.cases)} catalog cases")
    inputs = {"predicate": args.predicate, "max_order": str(cat.max_order)}
    data = {"cases": len(cat.cases), "matches": matches}
    return ResultDocument(command="search", inputs=inputs, data=data), None


def cmd_describe(args: Namespace, elab: Elaborator) -> CommandOutput:
    G = elab.group(args.group)
    report = structure_queries(G)
    data = {
        "label": G.label,
        "order": G.order,
        "abelian": report.is_abelian,
        "cyclic": report.is_cyclic,
        "exponent": report.exponent,
        "center": list(report.center.members),
        "generators": list(generating_sequence(G)),
        "elements": [{"index": i, "name": name, "order": o} for i, name, o in element_names(G)],
    }
    return ResultDocument(command="describe", inputs={"group": args.group}, data=data), G


COMMANDS: Dict[str, Callable[[Namespace, Elaborator], CommandOutput]] = {
    "sigma": cmd_sigma,
    "sigma-cyclic": cmd_sigma_cyclic,
    "sec": cmd_sec,
    "sigma-hom": cmd_sigma_hom,
    "poset": cmd_poset,
    "cocycle": cmd_cocycle,
    "hpoint": cmd_hpoint,
    "covers": cmd_covers,
    "verify": cmd_verify,
    "verify-batch": cmd_verify_batch,
    "search": cmd_search,
    "describe": cmd_describe,
}

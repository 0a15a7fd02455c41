"""Turn parsed expressions into groups and homomorphisms."""
from typing import Dict, Tuple, Union

from sectio import logger
from sectio.config.constants import ActionName, GroupFamily, HomKind
from sectio.errors import (ElaborationError, InvalidAction, InvalidParameter,
                           NotAbelian, NotNormal)
from sectio.groups.actions import inversion_action, trivial_action
from sectio.groups.constructors import (ProductGroup, SemidirectProduct,
                                        make_product, make_semidirect,
                                        make_standard, product_hom, quotient)
from sectio.groups.homs import Hom, identity_hom, trivial_hom
from sectio.groups.table import GroupTable
from sectio.homsearch.points import evaluation_hom, hom_group
from sectio.homsearch.search import HomQuery, first_hom, generating_sequence
from sectio.subgroups.lattice import all_subgroups, generated_subgroup
from sectio.subgroups.subgroup import Subgroup
from sectio.cli.grammar import GroupExpr, HomSpec, parse_group, parse_hom

_FAMILIES = {
    "Z": GroupFamily.CYCLIC,
    "D": GroupFamily.DIHEDRAL,
    "S": GroupFamily.SYMMETRIC,
    "A": GroupFamily.ALTERNATING,
    "E": GroupFamily.ELEMENTARY_ABELIAN,
}


def inversion_kernel(H: GroupTable) -> Subgroup:
    """The least index-2 subgroup of H, which acts trivially under "inv"."""
    candidates = [L for L in all_subgroups(H) if L.index == 2]
    if not candidates:
        raise ElaborationError(f"{H.label} has no subgroup of index 2 to define the inversion action")
    return min(candidates, key=lambda L: L.sort_key)


class Elaborator:
    """
    Builds groups and homomorphisms from expressions.

    Groups are cached by their pretty-printed expression, so equal
    expressions give the same GroupTable object.
    """

    def __init__(self):
        self._groups: Dict[str, GroupTable] = {}
        self._products: Dict[str, ProductGroup] = {}
        self._quotients: Dict[str, Hom] = {}

    def group(self, expr: Union[GroupExpr, str]) -> GroupTable:
        if isinstance(expr, str):
            expr = parse_group(expr)
        key = expr.pretty()
        if key not in self._groups:
            self._groups[key] = self._build(expr, key)
            logger.debug(f"Elaborated {key}: order {self._groups[key].order}")
        return self._groups[key]

    def product(self, expr: GroupExpr) -> ProductGroup:
        if expr.kind != "product":
            raise ElaborationError(f"{expr.pretty()} is not a product")
        self.group(expr)
        return self._products[expr.pretty()]

    def quotient_map(self, expr: GroupExpr, gens: Tuple[int, ...]) -> Hom:
        key = GroupExpr(kind="quot", params=tuple(gens), args=(expr,)).pretty()
        if key not in self._quotients:
            G = self.group(expr)
            if any(not 0 <= g < G.order for g in gens):
                raise ElaborationError(f"Generator index out of range for {G.label} of order {G.order}")
            N = generated_subgroup(G, gens)
            try:
                _, q = quotient(G, N, label=key)
            except NotNormal as e:
                raise ElaborationError(str(e)) from e
            self._quotients[key] = q
        return self._quotients[key]

    def _build(self, expr: GroupExpr, key: str) -> GroupTable:
        try:
            if expr.kind in _FAMILIES:
                return self._standard(expr)
            if expr.kind == "Q8":
                return make_standard(GroupFamily.QUATERNION)
            if expr.kind == "product":
                left, right = (self.group(a) for a in expr.args)
                prod = make_product(left, right, label=key)
                self._products[key] = prod
                return prod.group
            if expr.kind == "sd":
                return self._semidirect_product(expr, key).group
            return self.quotient_map(expr.args[0], expr.params).codomain
        except (InvalidParameter, InvalidAction, NotAbelian) as e:
            raise ElaborationError(f"{key}: {e}") from e

    def _standard(self, expr: GroupExpr) -> GroupTable:
        return make_standard(_FAMILIES[expr.kind], *expr.params)

    def _semidirect_product(self, expr: GroupExpr, key: str) -> SemidirectProduct:
        A, H = (self.group(a) for a in expr.args)
        if expr.action == ActionName.INVERSION:
            action = inversion_action(H, A, inversion_kernel(H).mask)
        else:
            action = trivial_action(H, A)
        return make_semidirect(A, H, action, label=key)

    def hom(self, spec: Union[HomSpec, str]) -> Hom:
        if isinstance(spec, str):
            spec = parse_hom(spec)
        try:
            return self._hom(spec)
        except (InvalidParameter, InvalidAction, NotAbelian) as e:
            raise ElaborationError(f"{spec.pretty()}: {e}") from e

    def _hom(self, spec: HomSpec) -> Hom:
        kind = spec.kind
        if kind == HomKind.IDENTITY:
            return identity_hom(self.group(spec.groups[0]))
        if kind == HomKind.QUOTIENT:
            return self.quotient_map(spec.groups[0], spec.values)
        if kind in (HomKind.PROJECTION, HomKind.INCLUSION):
            prod = self.product(spec.groups[0])
            if spec.index not in (1, 2):
                raise ElaborationError(f"Factor index must be 1 or 2, got {spec.index}")
            if kind == HomKind.PROJECTION:
                return prod.proj1 if spec.index == 1 else prod.proj2
            return prod.incl1 if spec.index == 1 else prod.incl2
        if kind == HomKind.MAP:
            return self._map(spec)
        if kind == HomKind.EVALUATION:
            G, A = (self.group(g) for g in spec.groups)
            if not 0 <= spec.index < G.order:
                raise ElaborationError(f"Element {spec.index} out of range for {G.label}")
            return evaluation_hom(hom_group(G, A), spec.index)
        if kind == HomKind.TRIVIAL:
            G, H = (self.group(g) for g in spec.groups)
            return trivial_hom(G, H)
        f1, f2 = (self._hom(h) for h in spec.homs)
        return product_hom(f1, f2)

    def _map(self, spec: HomSpec) -> Hom:
        """
        The homomorphism sending the generating sequence of the domain (see
        `describe`) to the listed images.
        """
        G, H = (self.group(g) for g in spec.groups)
        gens = generating_sequence(G)
        if len(spec.values) != len(gens):
            raise ElaborationError(
                f"{G.label} has generating sequence {list(gens)}; expected {len(gens)} images, got {len(spec.values)}"
            )
        if any(not 0 <= v < H.order for v in spec.values):
            raise ElaborationError(f"Image index out of range for {H.label}")
        hom = first_hom(HomQuery(G, H, pinned=dict(zip(gens, spec.values))))
        if hom is None:
            raise ElaborationError(f"No homomorphism {G.label} -> {H.label} with images {list(spec.values)}")
        return hom

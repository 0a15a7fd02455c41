"""
Theorem checks run by the verification harness.

Each check is a callable object evaluated on one homomorphism f: G -> H of
a batch; pair checks draw partners from the same batch. Budget exhaustion
is reported as BUDGET and unmet preconditions as SKIP, never as FAIL.
"""
from abc import ABC, abstractmethod
from math import gcd, inf
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sectio import logger
from sectio.cohomology.coboundary import (is_coboundary,
                                          sec_via_cohomology)
from sectio.cohomology.cocycle import (build_cocycle, difference_cocycle,
                                       restrict_cocycle)
from sectio.config.constants import Verdict
from sectio.config.settings import settings
from sectio.errors import OrderCapExceeded, SearchBudgetExceeded
from sectio.groups.constructors import (fiber_product, make_cyclic,
                                        make_elementary_abelian, make_product,
                                        product_hom, quotient, sum_hom)
from sectio.groups.homs import Hom, compose, identity_hom
from sectio.groups.table import GroupTable
from sectio.homsearch.points import evaluation_hom, hom_group, is_h_point
from sectio.homsearch.search import HomQuery, iter_homs
from sectio.homsearch.sections import (exists_fibrewise_morphism,
                                       exists_global_section,
                                       exists_local_section,
                                       is_locally_sectionable,
                                       is_locally_sectionable_by_definition)
from sectio.invariants.covering import (enumerate_minimum_covers, sigma,
                                        sigma_cyclic,
                                        sigma_cyclic_over_all_cyclic,
                                        sigma_over_all_subgroups)
from sectio.invariants.homcover import sigma_hom
from sectio.invariants.results import CoverResult, check_certificate
from sectio.invariants.sectional import (sec, sec_over_all_sectionable,
                                         sectionable_poset)
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.maps import (complement_pairs, kernel,
                                   restrict_to_preimage)
from sectio.verification.report import CheckOutcome

Evaluation = Tuple[Verdict, str]

# size limits of the slower checks
DEFINITION_MAX_ORDER = 24
COHOMOLOGY_MAX_ORDER = 24
TRANSVERSAL_MAX_ORDER = 8


def _show(v) -> str:
    return "inf" if v == inf else str(v)


def _result(ok: bool, detail: str) -> Evaluation:
    return (Verdict.PASS if ok else Verdict.FAIL), detail


class CheckContext:
    """
    Shared state of one verification run: the batch and memoized values.

    Values are memoized per object; the object is kept alive next to its
    value so identities are never reused.
    """

    def __init__(self, batch: Sequence[Hom], pair_limit: Optional[int] = None):
        self.batch = list(batch)
        self.pair_limit = pair_limit if pair_limit is not None else settings.PAIR_CHECK_LIMIT
        self._memo: Dict[Tuple[str, int], Tuple[object, object]] = {}
        self.klein = make_elementary_abelian(2, 2)
        self.z2 = make_cyclic(2)

    def memo(self, key: str, obj, compute: Callable[[], object]):
        slot = (key, id(obj))
        if slot not in self._memo:
            self._memo[slot] = (obj, compute())
        return self._memo[slot][1]

    # memoized invariants
    def sec(self, f: Hom) -> CoverResult:
        return self.memo("sec", f, lambda: sec(f))

    def sigma(self, G: GroupTable) -> CoverResult:
        return self.memo("sigma", G, lambda: sigma(G))

    def sigma_cyclic(self, G: GroupTable):
        return self.memo("sigma_cyclic", G, lambda: sigma_cyclic(G))

    def sigma_hom(self, f: Hom) -> CoverResult:
        return self.memo("sigma_hom", f, lambda: sigma_hom(f))

    def global_section(self, f: Hom) -> Optional[Hom]:
        return self.memo("global", f, lambda: exists_global_section(f))

    def locally_sectionable(self, f: Hom) -> bool:
        return self.memo("local", f, lambda: bool(is_locally_sectionable(f)))

    def identity(self, G: GroupTable) -> Hom:
        return self.memo("identity", G, lambda: identity_hom(G))

    def quotient_map(self, f: Hom) -> Hom:
        return self.memo("quotient", f, lambda: quotient(f.domain, kernel(f))[1])

    # partners
    def _limited(self, homs: List[Hom]) -> List[Hom]:
        return homs[:self.pair_limit]

    def same_codomain(self, f: Hom) -> List[Hom]:
        return self._limited([g for g in self.batch if g is not f and g.codomain is f.codomain])

    def same_kernel(self, f: Hom) -> List[Hom]:
        return self._limited([
            g for g in self.batch
            if g is not f and g.domain is f.domain and g.kernel_mask == f.kernel_mask
        ])

    def from_codomain(self, f: Hom) -> List[Hom]:
        return self._limited([g for g in self.batch if g.domain is f.codomain])

    def fitting_products(self, f: Hom) -> List[Hom]:
        """Partners whose product with f stays within the order cap."""
        return self._limited([
            g for g in self.batch
            if g.domain.order * f.domain.order <= settings.MAX_ORDER
            and 1 < g.codomain.order * f.codomain.order <= settings.ORACLE_MAX_ORDER
        ])


class TheoremCheck(ABC):
    """
    Base class of the checks.

    Subclasses set `name` and implement `evaluate`.
    """
    name = "check"

    @abstractmethod
    def evaluate(self, f: Hom, ctx: CheckContext) -> Evaluation:
        """Verdict and a one-line detail for f."""

    def __call__(self, case: str, f: Hom, ctx: CheckContext) -> CheckOutcome:
        try:
            verdict, detail = self.evaluate(f, ctx)
        except SearchBudgetExceeded as e:
            verdict, detail = Verdict.BUDGET, str(e)
        except OrderCapExceeded as e:
            verdict, detail = Verdict.SKIP, str(e)
        if verdict == Verdict.FAIL:
            logger.error(f"{self.name} failed on {case}: {detail}")
        return CheckOutcome(case=case, check=self.name, verdict=verdict, detail=detail)


class SecLowerBound(TheoremCheck):
    """sec(f) >= sigma(H); sigma(H) >= sigma(G) for epimorphisms."""
    name = "sec-lower-bound"

    def evaluate(self, f, ctx):
        s, h, g = ctx.sec(f).value, ctx.sigma(f.codomain).value, ctx.sigma(f.domain).value
        ok = s >= h and (not f.is_surjective or h >= g)
        return _result(ok, f"sec={_show(s)} sigma(H)={_show(h)} sigma(G)={_show(g)}")


class SecOfIdentity(TheoremCheck):
    name = "sec-identity"

    def evaluate(self, f, ctx):
        details = []
        ok = True
        for G in (f.domain, f.codomain):
            s = sec(ctx.identity(G)).value
            g = ctx.sigma(G).value
            ok = ok and s == g
            details.append(f"{G.label}: sec(id)={_show(s)} sigma={_show(g)}")
        return _result(ok, "; ".join(details))


class GlobalSectionValue(TheoremCheck):
    name = "global-section-value"

    def evaluate(self, f, ctx):
        if ctx.global_section(f) is None:
            return Verdict.SKIP, "no global section"
        s, h = ctx.sec(f).value, ctx.sigma(f.codomain).value
        return _result(s == h, f"sec={_show(s)} sigma(H)={_show(h)}")


class QuotientInvariance(TheoremCheck):
    name = "quotient-invariance"

    def evaluate(self, f, ctx):
        if not f.is_surjective:
            return Verdict.SKIP, "not surjective"
        s, q = ctx.sec(f).value, ctx.sec(ctx.quotient_map(f)).value
        return _result(s == q, f"sec(f)={_show(s)} sec(q_f)={_show(q)}")


class HomCoveringNumber(TheoremCheck):
    """sec(f) >= sigma(f), with equality for epimorphisms without a global section."""
    name = "hom-covering-number"

    def evaluate(self, f, ctx):
        s, c = ctx.sec(f).value, ctx.sigma_hom(f).value
        ok = s >= c
        if f.is_surjective and ctx.global_section(f) is None:
            ok = ok and s == c
        return _result(ok, f"sec={_show(s)} sigma(f)={_show(c)}")


class QuotientMapCoveringNumber(TheoremCheck):
    """Without a global section, sec(f) equals the covering number of G -> G/Ker f."""
    name = "quotient-map-covering-number"

    def evaluate(self, f, ctx):
        if not f.is_surjective:
            return Verdict.SKIP, "not surjective"
        if ctx.global_section(f) is not None:
            return Verdict.SKIP, "global section exists"
        s, c = ctx.sec(f).value, ctx.sigma_hom(ctx.quotient_map(f)).value
        return _result(s == c, f"sec(f)={_show(s)} sigma(q_f)={_show(c)}")


class CyclicUpperBound(TheoremCheck):
    name = "cyclic-upper-bound"

    def evaluate(self, f, ctx):
        if not ctx.locally_sectionable(f):
            return Verdict.SKIP, "not locally sectionable"
        s = ctx.sec(f).value
        h = ctx.sigma(f.codomain).value
        c = ctx.sigma_cyclic(f.codomain)[0].value
        ok = s <= c and (h != c or s == h)
        return _result(ok, f"sec={_show(s)} sigma(H)={_show(h)} sigma_c(H)={_show(c)}")


class KleinQuotientCriterion(TheoremCheck):
    """sigma(X) = 3 exactly when X maps onto Z2 x Z2."""
    name = "klein-quotient"

    def evaluate(self, f, ctx):
        details = []
        ok = True
        for X in (f.domain, f.codomain):
            epi = ctx.memo("klein", X, lambda: any(
                h.is_surjective for h in iter_homs(HomQuery(X, ctx.klein))
            ))
            three = ctx.sigma(X).value == 3
            ok = ok and epi == three
            details.append(f"{X.label}: epi={epi} sigma=3:{three}")
        return _result(ok, "; ".join(details))


class CyclicCoveringBounds(TheoremCheck):
    """sigma_c(X) >= sigma(X) >= 3 and sigma_c(X) <= the totient bound, for noncyclic X."""
    name = "cyclic-covering-bounds"

    def evaluate(self, f, ctx):
        groups = [X for X in (f.domain, f.codomain) if not X.is_cyclic]
        if not groups:
            return Verdict.SKIP, "both groups cyclic"
        details = []
        ok = True
        for X in groups:
            c, report = ctx.sigma_cyclic(X)
            s = ctx.sigma(X).value
            ok = ok and c.value >= s >= 3 and c.value <= report.bound
            details.append(f"{X.label}: sigma={s} sigma_c={c.value} bound={report.bound}")
        return _result(ok, "; ".join(details))


class FibrewiseMonotonicity(TheoremCheck):
    name = "fibrewise-monotonicity"

    def evaluate(self, f, ctx):
        partners = ctx.same_codomain(f)
        tested = 0
        for f2 in partners:
            psi = exists_fibrewise_morphism(f, f2)
            if psi is None:
                continue
            tested += 1
            if ctx.sec(f).value < ctx.sec(f2).value:
                return Verdict.FAIL, f"psi into {f2.describe()} but sec {_show(ctx.sec(f).value)} < {_show(ctx.sec(f2).value)}"
        if not tested:
            return Verdict.SKIP, "no fibrewise partner"
        return Verdict.PASS, f"{tested} fibrewise partners"


class FibrewiseEquivalentExamples(TheoremCheck):
    """sec(f∘pr1) = sec(f) for pr1: G x Z2 -> G, and sec(f₊) = sec(f) for abelian G."""
    name = "fibrewise-equivalence"

    def evaluate(self, f, ctx):
        s = ctx.sec(f).value
        pulled = compose(f, make_product(f.domain, ctx.z2).proj1)
        p = sec(pulled).value
        ok = p == s
        detail = f"sec(f)={_show(s)} sec(f∘pr1)={_show(p)}"
        if f.domain.is_abelian:
            try:
                plus = sec(sum_hom(f)).value
            except OrderCapExceeded:
                return _result(ok, detail + " f+ above the order cap")
            ok = ok and plus == s
            detail += f" sec(f+)={_show(plus)}"
        return _result(ok, detail)


class PullbackMonotonicity(TheoremCheck):
    name = "pullback-monotonicity"

    def evaluate(self, f, ctx):
        tested = 0
        for phi in ctx.same_codomain(f):
            if not phi.is_surjective:
                continue
            try:
                pulled = fiber_product(f, phi).to_k
            except OrderCapExceeded:
                continue
            tested += 1
            if sec(pulled).value > ctx.sec(f).value:
                return Verdict.FAIL, f"pullback along {phi.describe()} has sec {_show(sec(pulled).value)}"
        if not tested:
            return Verdict.SKIP, "no epimorphism partner within the order cap"
        return Verdict.PASS, f"{tested} pullbacks"


class ProductInequalities(TheoremCheck):
    """sec(f x id_Z2) <= sec(f), equal without a global section; sec(f) <= sec(f x f2) then too."""
    name = "product-inequalities"

    def evaluate(self, f, ctx):
        s = ctx.sec(f).value
        split = ctx.global_section(f) is not None
        with_id = sec(product_hom(f, ctx.identity(ctx.z2))).value
        ok = with_id <= s and (split or with_id == s)
        detail = f"sec(f)={_show(s)} sec(f x id)={_show(with_id)}"
        if not split:
            for f2 in ctx.fitting_products(f):
                paired = sec(product_hom(f, f2)).value
                if paired < s:
                    return Verdict.FAIL, detail + f"; sec(f x {f2.describe()})={_show(paired)}"
        return _result(ok, detail)


class CoprimeProductMinimum(TheoremCheck):
    """
    min(sec(f1), sec(f2)) <= sec(f1 x f2) when |H1| and |H2| are coprime,
    with equality when f1 x f2 splits.
    """
    name = "coprime-product-minimum"

    def evaluate(self, f, ctx):
        tested = 0
        for f2 in ctx.fitting_products(f):
            if gcd(f.codomain.order, f2.codomain.order) != 1:
                continue
            prod = product_hom(f, f2)
            low = min(ctx.sec(f).value, ctx.sec(f2).value)
            value = sec(prod).value
            tested += 1
            if low > value or (exists_global_section(prod) is not None and low != value):
                return Verdict.FAIL, f"with {f2.describe()}: min={_show(low)} sec(f1 x f2)={_show(value)}"
        if not tested:
            return Verdict.SKIP, "no coprime partner"
        return Verdict.PASS, f"{tested} coprime products"


class DirectSummandBound(TheoremCheck):
    """min(sec(f|A), sec(f|B)) <= sec(f) for H = A + B with coprime orders."""
    name = "direct-summand-bound"

    def evaluate(self, f, ctx):
        H = f.codomain
        if not H.is_abelian:
            return Verdict.SKIP, "codomain not abelian"
        pairs = [(A, B) for A, B in complement_pairs(H) if gcd(A.order, B.order) == 1]
        if not pairs:
            return Verdict.SKIP, "no coprime decomposition"
        s = ctx.sec(f).value
        split = ctx.global_section(f) is not None
        for A, B in pairs:
            low = min(sec(restrict_to_preimage(f, A)).value, sec(restrict_to_preimage(f, B)).value)
            if low > s or (split and low != s):
                return Verdict.FAIL, f"{A.name()} + {B.name()}: min={_show(low)} sec={_show(s)}"
        return Verdict.PASS, f"{len(pairs)} decompositions"


class PosetEquality(TheoremCheck):
    name = "poset-equality"

    def evaluate(self, f, ctx):
        s = ctx.sec(f).value
        p = sectionable_poset(f).cover_number
        H = f.codomain
        identity_poset = ctx.memo("identity_poset", H, lambda: sectionable_poset(ctx.identity(H)).cover_number)
        h = ctx.sigma(H).value
        return _result(s == p and h == identity_poset,
                       f"sec={_show(s)} poset={_show(p)} sigma(H)={_show(h)} poset(id)={_show(identity_poset)}")


class LowerBoundConsistency(TheoremCheck):
    """sec(f) > sigma(H) exactly when every minimum cover has a non-sectionable member."""
    name = "lower-bound"

    def evaluate(self, f, ctx):
        H = f.codomain
        if H.order > settings.COVERS_MAX_ORDER:
            return Verdict.SKIP, "codomain above the cover enumeration limit"
        h = ctx.sigma(H).value
        if h == inf:
            return Verdict.SKIP, "sigma(H) infinite"
        covers = ctx.memo("covers", H, lambda: enumerate_minimum_covers(H))
        sectionable = {L.mask for L in sectionable_poset(f).elements}
        blocked = all(any(L.mask not in sectionable for L in cover) for cover in covers)
        s = ctx.sec(f).value
        return _result((s > h) == blocked, f"sec={_show(s)} sigma(H)={h} covers={len(covers)} all blocked={blocked}")


class KernelDetermination(TheoremCheck):
    name = "kernel-determination"

    def evaluate(self, f, ctx):
        partners = ctx.same_kernel(f)
        if not partners:
            return Verdict.SKIP, "no partner with the same kernel"
        s = ctx.sec(f).value
        for g in partners:
            if ctx.sec(g).value != s:
                return Verdict.FAIL, f"{g.describe()} has sec {_show(ctx.sec(g).value)}, f has {_show(s)}"
        return Verdict.PASS, f"{len(partners)} partners agree on {_show(s)}"


class FinitenessCriterion(TheoremCheck):
    name = "finiteness"

    def evaluate(self, f, ctx):
        if not f.is_surjective:
            return Verdict.SKIP, "not surjective"
        finite = ctx.sec(f).is_finite
        expected = not f.codomain.is_cyclic and ctx.locally_sectionable(f)
        return _result(finite == expected, f"finite={finite} expected={expected}")


class MaximalCandidateOracle(TheoremCheck):
    """Maximal candidates agree with search over all candidates for sec, sigma and sigma_c."""
    name = "maximal-candidate-oracle"

    def evaluate(self, f, ctx):
        H = f.codomain
        if H.order > settings.ORACLE_MAX_ORDER:
            return Verdict.SKIP, "codomain above the oracle limit"
        s, o = ctx.sec(f).value, sec_over_all_sectionable(f).value
        ok = s == o
        detail = f"sec={_show(s)} oracle={_show(o)}"
        for X in (f.domain, f.codomain):
            if X.order > settings.ORACLE_MAX_ORDER:
                continue
            a = ctx.sigma(X).value
            b = ctx.memo("sigma_oracle", X, lambda: sigma_over_all_subgroups(X).value)
            c = ctx.sigma_cyclic(X)[0].value
            d = ctx.memo("sigma_c_oracle", X, lambda: sigma_cyclic_over_all_cyclic(X).value)
            ok = ok and a == b and c == d
            detail += f"; {X.label}: sigma {_show(a)}/{_show(b)} sigma_c {_show(c)}/{_show(d)}"
        return _result(ok, detail)


class LocalSectionabilityDefinition(TheoremCheck):
    """The order-lift test agrees with the subgroup search."""
    name = "local-sectionability-definition"

    def evaluate(self, f, ctx):
        if max(f.domain.order, f.codomain.order) > DEFINITION_MAX_ORDER:
            return Verdict.SKIP, "groups above the definitional limit"
        fast = ctx.locally_sectionable(f)
        slow = bool(is_locally_sectionable_by_definition(f))
        return _result(fast == slow, f"lifts={fast} definition={slow}")


class GlobalImpliesLocal(TheoremCheck):
    name = "global-implies-local"

    def evaluate(self, f, ctx):
        if ctx.global_section(f) is None:
            return Verdict.SKIP, "no global section"
        subgroups = list(all_subgroups(f.codomain))
        missing = [L for L in subgroups if exists_local_section(f, L) is None]
        return _result(not missing, f"{len(subgroups)} subgroups, {len(missing)} without a section")


class LocalSectionabilityComposition(TheoremCheck):
    """g∘f is locally sectionable when f and g are locally sectionable epimorphisms."""
    name = "local-sectionability-composition"

    def evaluate(self, f, ctx):
        if not (f.is_surjective and ctx.locally_sectionable(f)):
            return Verdict.SKIP, "f is not a locally sectionable epimorphism"
        tested = 0
        for g in ctx.from_codomain(f):
            if not (g.is_surjective and ctx.locally_sectionable(g)):
                continue
            tested += 1
            if not is_locally_sectionable(compose(g, f)):
                return Verdict.FAIL, f"composite with {g.describe()} is not locally sectionable"
        if not tested:
            return Verdict.SKIP, "no composable partner"
        return Verdict.PASS, f"{tested} composites"


class EvaluationCriterion(TheoremCheck):
    """
    a is an H-point iff ev_a is onto, for abelian H; for H = Z2 x Z2 also
    iff sec(ev_a) = 3.
    """
    name = "evaluation-criterion"

    def evaluate(self, f, ctx):
        G = f.domain
        if G.order > settings.ORACLE_MAX_ORDER:
            return Verdict.SKIP, "domain above the oracle limit"
        targets = [ctx.klein]
        if f.codomain.is_abelian and f.codomain.order > 1:
            targets.append(f.codomain)
        details = []
        for H in targets:
            verdict = ctx.memo(f"evaluation:{id(H)}", G, lambda: self._check_pair(G, H, H is ctx.klein))
            if verdict[0] != Verdict.PASS:
                return verdict
            details.append(verdict[1])
        return Verdict.PASS, "; ".join(details)

    @staticmethod
    def _check_pair(G: GroupTable, H: GroupTable, klein: bool) -> Evaluation:
        hg = hom_group(G, H)
        points = 0
        for a in range(G.order):
            ev = evaluation_hom(hg, a)
            point = is_h_point(G, H, a)
            if point != ev.is_surjective:
                return Verdict.FAIL, f"{G.element_name(a)}: H-point={point} ev onto={ev.is_surjective}"
            if klein and point != (sec(ev).value == 3):
                return Verdict.FAIL, f"{G.element_name(a)}: H-point={point} sec(ev)={_show(sec(ev).value)}"
            points += point
        return Verdict.PASS, f"{H.label}: {points} points, |Hom|={hg.base.order}"


def _cocycle_case(f: Hom, limit: int):
    if not f.is_surjective:
        return None, "not surjective"
    if not kernel(f).is_abelian:
        return None, "kernel not abelian"
    if f.codomain.order > limit:
        return None, "codomain above the cohomology limit"
    return build_cocycle(f), ""


class CocycleSectionEquivalence(TheoremCheck):
    name = "cocycle-section-equivalence"

    def evaluate(self, f, ctx):
        built, why = _cocycle_case(f, COHOMOLOGY_MAX_ORDER)
        if built is None:
            return Verdict.SKIP, why
        _, w = built
        for L in all_subgroups(f.codomain):
            trivial = bool(is_coboundary(restrict_cocycle(w, L)))
            local = exists_local_section(f, L) is not None
            if trivial != local:
                return Verdict.FAIL, f"{L.name()}: coboundary={trivial} section={local}"
        return Verdict.PASS, f"{len(all_subgroups(f.codomain))} subgroups agree"


class CohomologicalSec(TheoremCheck):
    name = "cohomological-sec"

    def evaluate(self, f, ctx):
        built, why = _cocycle_case(f, COHOMOLOGY_MAX_ORDER)
        if built is None:
            return Verdict.SKIP, why
        s, c = ctx.sec(f).value, sec_via_cohomology(f).value
        return _result(s == c, f"sec={_show(s)} cohomology={_show(c)}")


class TransversalIndependence(TheoremCheck):
    name = "transversal-independence"

    def evaluate(self, f, ctx):
        built, why = _cocycle_case(f, TRANSVERSAL_MAX_ORDER)
        if built is None:
            return Verdict.SKIP, why
        _, w = built
        other = [0] * f.codomain.order
        for a in range(f.domain.order):
            if f.images[a]:
                other[f.images[a]] = a
        _, w2 = build_cocycle(f, rep=other)
        return _result(bool(is_coboundary(difference_cocycle(w, w2))), "difference of two transversals")


class CoprimeCoboundary(TheoremCheck):
    name = "coprime-coboundary"

    def evaluate(self, f, ctx):
        built, why = _cocycle_case(f, COHOMOLOGY_MAX_ORDER)
        if built is None:
            return Verdict.SKIP, why
        _, w = built
        k = kernel(f).order
        coprime = [L for L in all_subgroups(f.codomain) if gcd(L.order, k) == 1]
        bad = [L for L in coprime if not is_coboundary(restrict_cocycle(w, L))]
        return _result(not bad, f"{len(coprime)} coprime subgroups, {len(bad)} non-trivial restrictions")


class CertificateCheck(TheoremCheck):
    """Every produced witness and infinity reason re-validates."""
    name = "certificates"

    def evaluate(self, f, ctx):
        ok = check_certificate(ctx.sec(f), hom=f)
        ok = ok and check_certificate(ctx.sigma(f.codomain), group=f.codomain)
        ok = ok and check_certificate(ctx.sigma_hom(f), group=f.domain, hom=f)
        return _result(ok, f"sec {ctx.sec(f).display_value()}, sigma(f) {ctx.sigma_hom(f).display_value()}")


ALL_CHECKS: Tuple[TheoremCheck, ...] = (
    SecLowerBound(),
    SecOfIdentity(),
    GlobalSectionValue(),
    QuotientInvariance(),
    HomCoveringNumber(),
    QuotientMapCoveringNumber(),
    CyclicUpperBound(),
    KleinQuotientCriterion(),
    CyclicCoveringBounds(),
    FibrewiseMonotonicity(),
    FibrewiseEquivalentExamples(),
    PullbackMonotonicity(),
    ProductInequalities(),
    CoprimeProductMinimum(),
    DirectSummandBound(),
    PosetEquality(),
    LowerBoundConsistency(),
    KernelDetermination(),
    FinitenessCriterion(),
    MaximalCandidateOracle(),
    LocalSectionabilityDefinition(),
    GlobalImpliesLocal(),
    LocalSectionabilityComposition(),
    EvaluationCriterion(),
    CocycleSectionEquivalence(),
    CohomologicalSec(),
    TransversalIndependence(),
    CoprimeCoboundary(),
    CertificateCheck(),
)

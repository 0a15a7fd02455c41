"""Property-based tests for the covering invariants."""
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from sectio.groups.constructors import (make_cyclic, make_dihedral,
                                        make_elementary_abelian, make_product,
                                        make_quaternion8, make_symmetric,
                                        quotient)
from sectio.groups.homs import identity_hom
from sectio.homsearch.sections import exists_global_section
from sectio.invariants.covering import sigma, sigma_cyclic
from sectio.invariants.homcover import sigma_hom
from sectio.invariants.results import check_certificate
from sectio.invariants.sectional import sec
from sectio.subgroups.lattice import all_subgroups

SMALL_GROUPS = [
    lambda: make_cyclic(4),
    lambda: make_cyclic(6),
    lambda: make_elementary_abelian(2, 2),
    lambda: make_elementary_abelian(2, 3),
    lambda: make_elementary_abelian(3, 2),
    lambda: make_dihedral(4),
    lambda: make_dihedral(5),
    lambda: make_quaternion8(),
    lambda: make_symmetric(3),
    lambda: make_product(make_cyclic(2), make_cyclic(4)).group,
]

groups = st.sampled_from(SMALL_GROUPS).map(lambda build: build())

PROPERTY_SETTINGS = settings(
    max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)


@PROPERTY_SETTINGS
@given(G=groups)
def test_sigma_bounds(G):
    """sigma is infinite exactly for cyclic groups, at least 3 otherwise, and at most sigma_c."""
    result = sigma(G)
    cyclic_result, report = sigma_cyclic(G)
    assert result.is_infinite == G.is_cyclic
    if result.is_finite:
        assert 3 <= result.value <= cyclic_result.value <= report.bound
        assert check_certificate(result, group=G)
        assert check_certificate(cyclic_result, group=G)


@PROPERTY_SETTINGS
@given(G=groups)
def test_sec_of_identity(G):
    assert sec(identity_hom(G)).value == sigma(G).value


@PROPERTY_SETTINGS
@given(G=groups, data=st.data())
def test_quotient_maps(G, data):
    """For a quotient map f: sigma(Q) <= sec(f), with equality when f splits."""
    # Setup
    N = data.draw(st.sampled_from(all_subgroups(G).normal()))
    Q, f = quotient(G, N)

    # Execute
    value = sec(f)

    # Verify
    assert check_certificate(value, hom=f)
    assert value.value >= sigma(Q).value
    if exists_global_section(f) is not None:
        assert value.value == sigma(Q).value


@PROPERTY_SETTINGS
@given(G=groups, data=st.data())
def test_sigma_hom_certificate(G, data):
    N = data.draw(st.sampled_from(all_subgroups(G).normal()))
    _, f = quotient(G, N)
    result = sigma_hom(f)
    assert check_certificate(result, group=G, hom=f)
    if result.is_finite:
        assert all(N.mask & ~L.mask == 0 and L.mask != N.mask for L in result.witness)

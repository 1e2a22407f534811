import pytest

from twocheck import elements, fixtures as fx, limits
from twocheck.fincat import is_isomorphism_of_categories
from twocheck.limits import OMEGA, OMEGA_OP
from twocheck.twocat import (
    all_arrows_family,
    canonical_omegas,
    complete_two_functor,
    compose_two_functors,
    identity_arrows_family,
    omega_l,
    omega_s,
    validate_arrow_family,
    validate_two_category,
    validate_two_functor,
)


@pytest.fixture(scope="module")
def inserter_elements():
    W = fx.inserter_weight()
    sigma = all_arrows_family(W.shape)
    return W, elements.build_elements(W, sigma)


def test_elements_of_inserter_weight(inserter_elements):
    W, el = inserter_elements
    K = el.two_category
    assert sorted(K.objects) == ["(o0,b)", "(o1,b)", "(s,a)"]

    def phi_is_identity(c):
        f, phi, _, _ = el.one_data[c]
        B = W.shape.one_cell_hom[f][1]
        return W.ob[B].is_identity(phi)

    generators = {c for c in K.one_cells
                  if el.one_data[c][0] in ("u", "v") or not phi_is_identity(c)}
    projections = {el.projection.one_map[c] for c in generators}
    assert projections == {"u", "v", "id_b"}
    assert len(K.one_cells) == 7


def test_id_sigma_family(inserter_elements):
    W, el = inserter_elements
    # (f, id) arrows only
    for cid in el.id_sigma.members:
        f, phi, s, t = el.one_data[cid]
        B = W.shape.one_cell_hom[f][1]
        assert W.ob[B].is_identity(phi)
    validate_arrow_family(el.two_category, el.id_sigma.members)


def test_sigma_variants_u_and_v():
    # Both published Sigma choices for the conical inserter are constructible.
    W = fx.inserter_weight()
    shape = W.shape
    for member in ("u", "v"):
        sigma = validate_arrow_family(shape, [shape.id1("a"), shape.id1("b"), member])
        el = elements.build_elements(W, sigma)
        projected = {el.projection.one_map[c] for c in el.id_sigma.members}
        assert member in projected
        assert {"u", "v"} - {member} & projected == set()


def test_trivial_weight_elements_isomorphic_to_shape(k_pair):
    W = fx.trivial_weight(k_pair)
    sigma = all_arrows_family(k_pair)
    el = elements.build_elements(W, sigma)
    K = el.two_category
    assert len(K.objects) == len(k_pair.objects)
    assert len(K.one_cells) == len(k_pair.one_cells)
    assert len(K.two_cells) == len(k_pair.two_cells)
    assert len(el.id_sigma.members) == len(sigma.members)
    assert is_isomorphism_of_categories_on_two(el.projection)


def is_isomorphism_of_categories_on_two(F):
    return (
        len(set(F.object_map.values())) == len(F.source.objects) == len(F.target.objects)
        and len(set(F.one_map.values())) == len(F.source.one_cells) == len(F.target.one_cells)
        and len(set(F.two_map.values())) == len(F.source.two_cells) == len(F.target.two_cells)
    )


def test_elements_output_validates(inserter_elements):
    W, el = inserter_elements
    K = el.two_category
    validate_two_category(K.name, K.objects, K.homs, K.identity_1, K.hcomp1_table, K.hcomp2_table)
    P = el.projection
    validate_two_functor(P.name, P.source, P.target, P.object_map, P.one_map, P.two_map)


@pytest.fixture(scope="module")
def cat12_setup():
    K, fun_of, _ = fx.cat_two_category("K_CAT12", {"c1": fx.cat_one(), "c2": fx.cat_two()})
    const0 = next(c for c, f in fun_of.items()
                  if c.endswith("<c2,c2>") and f.object_map == {"o0": "o0", "o1": "o0"})
    const1 = next(c for c, f in fun_of.items()
                  if c.endswith("<c2,c2>") and f.object_map == {"o0": "o1", "o1": "o1"})
    shape = fx.k_pair()
    F = complete_two_functor("insdiag", shape, K, {"a": "c2", "b": "c2"},
                             {"u": const0, "v": const1}, {})
    return K, shape, F


@pytest.mark.parametrize("orientation", [OMEGA, OMEGA_OP])
@pytest.mark.parametrize("vertex", ["c1", "c2"])
def test_cone_correspondence_roundtrip(cat12_setup, orientation, vertex):
    K, shape, F = cat12_setup
    W = fx.inserter_weight()
    sigma = all_arrows_family(shape)
    for om in (omega_s(K), omega_l(K)):
        corr = elements.cone_correspondence(W, F, sigma, om, vertex, orientation)
        assert is_isomorphism_of_categories(corr.to_conical)
        assert is_isomorphism_of_categories(corr.to_weighted)


def test_cone_correspondence_with_restriction(cat12_setup):
    K, shape, F = cat12_setup
    W = fx.inserter_weight()
    sigma = all_arrows_family(shape)
    corr = elements.cone_correspondence(W, F, sigma, omega_l(K), "c1",
                                        omega_prime=omega_s(K))
    assert is_isomorphism_of_categories(corr.to_conical)


def test_limit_transport_projection_formula(cat12_setup):
    # xi_A(x) = pi_(x,A): transport the conical limit over El_W to a weighted
    # limit cone and compare with the directly found weighted limit.
    K, shape, F = cat12_setup
    W = fx.inserter_weight()
    sigma = all_arrows_family(shape)
    om = omega_s(K)
    el = elements.build_elements(W, sigma)
    conical_diagram = compose_two_functors(F, el.projection)
    cert = limits.find_conical_limit(conical_diagram, el.id_sigma, om)
    assert cert is not None
    transported = elements.conical_to_weighted_cone(el, cert.cone, W, F)
    for oid, (x, A) in el.object_data.items():
        assert transported.comp_obj[(A, x)] == cert.cone.component_1[oid]
    wcert = limits.certify_weighted_cone(W, F, sigma, om, transported)
    assert wcert is not None
    direct = limits.find_weighted_limit(W, F, sigma, om)
    assert direct.vertex == wcert.vertex


def test_compatibility_transfer(cat12_setup):
    # Omega'-compatibility verdicts agree between the weighted limit and its
    # conical expression over the elements 2-category.
    K, shape, F = cat12_setup
    W = fx.inserter_weight()
    sigma = all_arrows_family(shape)
    om = omega_s(K)
    el = elements.build_elements(W, sigma)
    conical_diagram = compose_two_functors(F, el.projection)
    conical_cert = limits.find_conical_limit(conical_diagram, el.id_sigma, om)
    weighted_cert = limits.find_weighted_limit(W, F, sigma, om)
    for name, fam in canonical_omegas(K).items():
        assert limits.check_compatibility(conical_cert, fam) == \
            limits.check_compatibility(weighted_cert, fam)

import pytest

from twocheck import catlim, fixtures as fx
from twocheck.fincat import NatTransformation
from twocheck.twocat import all_arrows_family, identity_arrows_family

import oracles


def corpus():
    """Weighted Cat_fin diagrams: the comparison corpus for the
    specialization checks (inserter and equifier weights included)."""
    one, two, par, gz2 = fx.cat_one(), fx.cat_two(), fx.cat_par(), fx.cat_group_z2()
    entries = []

    W_ins = fx.inserter_weight()
    picks = fx.pick_functor("picks", two, par, "x", "y", "sa")
    pickt = fx.pick_functor("pickt", two, par, "x", "y", "ta")
    entries.append(("inserter", W_ins, fx._complete_cat_diagram(
        "F_ins", W_ins.shape, {"a": two, "b": par}, {"u": picks, "v": pickt})))

    entries.append(("inserter-small", W_ins, fx._complete_cat_diagram(
        "F_ins2", W_ins.shape,
        {"a": one, "b": two},
        {"u": fx.point_like(one, two, "o0"), "v": fx.point_like(one, two, "o1")})))

    W_eqf = fx.equifier_weight()
    fu = fx.pick_functor("fu", two, gz2, "s", "s", "id_s")
    alpha = NatTransformation(fu, fu, {"o0": "id_s", "o1": "id_s"})
    beta = NatTransformation(fu, fu, {"o0": "sym", "o1": "sym"})
    entries.append(("equifier", W_eqf, fx._complete_cat_diagram(
        "F_eqf", W_eqf.shape, {"a": two, "b": gz2}, {"u": fu, "v": fu},
        {"k1": alpha, "k2": beta})))

    shape_d2 = fx.k_disc2()
    W_prod = fx.trivial_weight(shape_d2)
    entries.append(("product", W_prod, fx._complete_cat_diagram(
        "F_prod", shape_d2, {"a": two, "b": par}, {})))

    W_arr = fx.comma_weight()
    entries.append(("comma", W_arr, fx._complete_cat_diagram(
        "F_comma", W_arr.shape, {"a": two, "b": par}, {"u": picks})))

    W_cot = fx.cotensor2_weight()
    entries.append(("cotensor", W_cot, fx._complete_cat_diagram(
        "F_cot", W_cot.shape, {"S": par}, {})))
    return entries


def engine_data_sets(result):
    """Canonicalize the engine's limit category into oracle-comparable sets."""
    objs = sorted(result.weight.shape.objects)

    def cone_key(cone):
        return (
            tuple((A, tuple(sorted(cone.t[A].object_map.items())),
                   tuple(sorted(cone.t[A].morphism_map.items()))) for A in objs),
            tuple(sorted(((f, x), m) for (f, x), m in cone.cells.items())),
        )

    cones = frozenset(cone_key(c) for c in result.cones.cones.values())
    morphisms = set()
    cat = result.limit
    for mid, mor in result.cones.arrows.items():
        src = result.cones.cones[cat.source[mid]]
        tgt = result.cones.cones[cat.target[mid]]
        morphisms.add((
            cone_key(src), cone_key(tgt),
            tuple((A, tuple(sorted(mor.rho[A].component.items()))) for A in objs),
        ))
    return cones, frozenset(morphisms)


CASES = [
    # (engine sigma choice, engine tag, oracle kind, oracle sigma)
    ("all", "l", "lax", None),
    ("ids", "s", "lax", None),          # Sigma = identities trivializes Omega
    ("all", "p", "pseudo", None),
    ("all", "s", "strict", None),
]


@pytest.mark.parametrize("name,W,F", corpus(), ids=[e[0] for e in corpus()])
@pytest.mark.parametrize("sig,tag,kind,osig", CASES)
def test_specializations_match_direct_constructions(name, W, F, sig, tag, kind, osig):
    sigma = all_arrows_family(W.shape) if sig == "all" else identity_arrows_family(W.shape)
    result = catlim.cat_limit_construct(W, F, sigma, tag)
    assert result.probe_verified, result.probe_reports
    got = engine_data_sets(result)
    want = oracles.weak_limit_direct(W, F, kind, osig)
    assert got[0] == want[0]
    assert got[1] == want[1]


def test_probe_set_default_names():
    probes = catlim.default_probes()
    assert set(probes) == {"empty", "one", "two", "par"}


def test_evaluation_functor_components():
    entries = corpus()
    name, W, F = entries[1]
    result = catlim.cat_limit_construct(W, F, all_arrows_family(W.shape), "s")
    ev = result.evaluation_functor("a", "s")
    assert ev.source == result.limit


def test_conical_expression_via_elements_matches():
    # build the conical sigma-omega transformation category over El_W with
    # the trivial weight and compare with the weighted construction
    from twocheck import elements

    name, W, F = corpus()[1]
    sigma = all_arrows_family(W.shape)
    el = elements.build_elements(W, sigma)
    # conical diagram over El_W valued in Cat: compose F with the projection
    ob = {oid: F.ob[el.projection.object_map[oid]] for oid in el.two_category.objects}
    arrow = {cid: F.arrow[el.projection.one_map[cid]] for cid in el.two_category.one_cells}
    cell = {tid: F.cell[el.projection.two_map[tid]] for tid in el.two_category.two_cells}
    F_el = fx.validate_cat_diagram("F_el", el.two_category, ob, arrow, cell)
    W_el = fx.trivial_weight(el.two_category)
    conical = catlim.cat_limit_construct(W_el, F_el, el.id_sigma, "s")
    weighted = catlim.cat_limit_construct(W, F, sigma, "s")
    assert conical.probe_verified and weighted.probe_verified
    assert len(conical.limit.objects) == len(weighted.limit.objects)
    assert len(conical.limit.morphisms) == len(weighted.limit.morphisms)


def test_inserter_cross_validation_two_code_paths():
    # the inserter computed by cat_limit_construct, realized as an object of
    # a table-encoded sub-2-category of Cat, passes special_limit_check
    from twocheck import limits

    two, par = fx.cat_two(), fx.cat_par()
    disc2 = fx.build_category("disc2", ["q0", "q1"], {})
    K, fun_of, nat_of = fx.cat_two_category(
        "K_CAT3", {"ctwo": two, "cpar": par, "cd2": disc2})
    picks = next(c for c, f in fun_of.items()
                 if c.endswith("<ctwo,cpar>") and f.morphism_map.get("ph") == "sa")
    pickt = next(c for c, f in fun_of.items()
                 if c.endswith("<ctwo,cpar>") and f.morphism_map.get("ph") == "ta")
    report = limits.find_special_limit(K, "inserter", {"f": picks, "g": pickt})
    assert report is not None and report.candidate["vertex"] == "cd2"

    W = fx.inserter_weight()
    F = fx._complete_cat_diagram(
        "F_ins", W.shape, {"a": two, "b": par},
        {"u": fx.pick_functor("picks", two, par, "x", "y", "sa"),
         "v": fx.pick_functor("pickt", two, par, "x", "y", "ta")})
    result = catlim.cat_limit_construct(W, F, all_arrows_family(W.shape), "s")
    assert len(result.limit.objects) == len(disc2.objects)
    assert len(result.limit.morphisms) == len(disc2.morphisms)

import itertools

import pytest

from twocheck import elements, fixtures as fx, limits, monad as md, lifting
from twocheck.errors import NotCompatible, PreconditionFailure, SubsetFailure
from twocheck.lifting import (
    MODE_CO,
    MODE_INV,
    MODE_OP,
    corollary_runner,
    inserter_key_equation,
    lift_conical_op_limit,
    lift_equifier,
    lift_inserter,
    lift_product,
    lift_weighted_op_limit,
)
from twocheck.monad import (
    CO_OMEGA_VARIANT,
    build_talg,
    enumerate_algebra_two_cells,
    enumerate_algebras,
    identity_monad,
    validate_monad,
)
from twocheck.twocat import (
    all_arrows_family,
    canonical_omegas,
    co_dual,
    complete_two_functor,
    compose_two_functors,
    generated_cell_family,
    identity_arrows_family,
    omega_l,
    omega_p,
    omega_s,
)

import sweep


def ident(K):
    monad = identity_monad(K)
    return validate_monad(K, monad.endo, monad.mult, monad.unit)


# ---------------------------------------------------------------------------
# Theorem suite (the exhaustive sweep shared with acceptance)


@pytest.fixture(scope="session")
def theorem_sweep():
    return sweep.theorem_instances()


def test_theorem_sweep_nonempty_and_diverse(theorem_sweep):
    bases = {K.name for K, *_ in theorem_sweep}
    assert {"K_TERM", "K_CELL", "K_Z2", "K_LE", "K_CONJ"} <= bases
    assert len(theorem_sweep) > 100


def test_theorem_sweep_all_pass(theorem_sweep):
    for K, monad, sigma, omega, pname, talg, Fbar, cert in theorem_sweep:
        res = lift_conical_op_limit(monad, sigma, omega, talg, Fbar, cert,
                                    dict(canonical_omegas(K)))
        assert res.status == "pass", (K.name, res.transcript)


def test_special_limits_sweep_all_pass():
    for kind, K, monad, omega, talg, payload, base in sweep.special_limit_instances():
        oms = dict(canonical_omegas(K))
        if kind == "product":
            res = lift_product(monad, omega, talg, payload, base, oms)
        elif kind == "inserter":
            res = lift_inserter(monad, omega, talg, payload[0], payload[1], base, oms)
        else:
            res = lift_equifier(monad, omega, talg, payload[0], payload[1], base, oms)
        assert res.status == "pass", (kind, K.name, res.transcript)


# ---------------------------------------------------------------------------
# identity-monad reductions


def test_identity_monad_lift_reduces_to_base(k_cell):
    T = ident(k_cell)
    om = omega_l(k_cell)
    talg = build_talg(T, om)
    shape = fx.k_term()
    algX = next(a for a in talg.algebra_of.values() if a.carrier == "X")
    Fbar = lifting._transport_diagram({"shape": shape, "objects": {"S": algX}}, talg)
    F = compose_two_functors(talg.forgetful, Fbar)
    sigma = all_arrows_family(shape)
    base = limits.find_conical_limit(F, sigma, om, limits.OMEGA_OP)
    res = lift_conical_op_limit(T, sigma, om, talg, Fbar, base, {})
    assert res.status == "pass"
    assert res.lifted_algebra.carrier == base.vertex
    assert res.lifted_algebra.structure == k_cell.id1(base.vertex)
    # forgetful image of the lifted cone is the base cone verbatim
    U = talg.forgetful
    for A, cid in res.lifted_cone.component_1.items():
        assert U.one_map[cid] == base.cone.component_1[A]


def test_identity_monad_product_reduces_to_base(k_nc):
    T = ident(k_nc)
    om = omega_p(k_nc)
    talg = build_talg(T, om)
    base = limits.find_special_limit(k_nc, "product", {"objects": ["B", "B"]})
    algB = next(a for a in talg.algebra_of.values() if a.carrier == "B")
    res = lift_product(T, om, talg, [algB, algB], base, dict(canonical_omegas(k_nc)))
    assert res.status == "pass"
    assert res.lifted_algebra.carrier == "L"


# ---------------------------------------------------------------------------
# genuine precondition failures on valid inputs


def test_not_compatible_base_is_reported(k_nc, k_disc2):
    T = ident(k_nc)
    fam = generated_cell_family(k_nc, ["z1_p1", "z1_p2"])
    talg = build_talg(T, fam)
    from twocheck.twocat import validate_two_functor

    F = validate_two_functor("BB", k_disc2, k_nc,
                             {"a": "B", "b": "B"},
                             {"id_a": "oneB", "id_b": "oneB"},
                             {"i_id_a": "z0_oneB", "i_id_b": "z0_oneB"})
    base = limits.find_conical_limit(F, all_arrows_family(k_disc2), omega_s(k_nc),
                                     limits.OMEGA_OP)
    assert base is not None
    algB = next(a for a in talg.algebra_of.values() if a.carrier == "B")
    Fbar = lifting._transport_diagram(
        {"shape": k_disc2, "objects": {"a": algB, "b": algB}}, talg)
    res = lift_conical_op_limit(T, all_arrows_family(k_disc2), omega_s(k_nc), talg, Fbar, base, {})
    assert res.status == "precondition-failed"
    assert isinstance(res.error, NotCompatible)


def test_product_lift_not_compatible(k_nc):
    T = ident(k_nc)
    fam = generated_cell_family(k_nc, ["z1_p1", "z1_p2"])
    talg = build_talg(T, fam)
    base = limits.find_special_limit(k_nc, "product", {"objects": ["B", "B"]})
    algB = next(a for a in talg.algebra_of.values() if a.carrier == "B")
    res = lift_product(T, fam, talg, [algB, algB], base, {})
    assert res.status == "precondition-failed"
    assert isinstance(res.error, NotCompatible)


def test_weighted_subset_gate(k_le):
    T = ident(k_le)
    talg = build_talg(T, omega_l(k_le))  # Omega' = Omega_l
    W = fx.trivial_weight(fx.k_term())
    algS = next(iter(talg.algebra_of.values()))
    Fbar = lifting._transport_diagram({"shape": W.shape, "objects": {"S": algS}}, talg)
    res = lift_weighted_op_limit(T, all_arrows_family(W.shape), omega_s(k_le), talg, W, Fbar, {})
    assert res.status == "precondition-failed"
    assert isinstance(res.error, SubsetFailure)


# ---------------------------------------------------------------------------
# Prop 5.3 key equation


def test_inserter_key_equation_equivalence(k_conj, twist_monad):
    om = omega_p(k_conj)
    talg = build_talg(twist_monad, om)
    mors = sorted(talg.morphism_of.values(), key=lambda m: m.key())
    checked = 0
    for mf, mg in itertools.product(mors, repeat=2):
        if mf.source != mg.source or mf.target != mg.target:
            continue
        base = limits.find_special_limit(k_conj, "inserter",
                                         {"f": mf.one_cell, "g": mg.one_cell})
        if base is None:
            continue
        K = k_conj
        for qmor in mors:
            if qmor.target != mf.source:
                continue
            fq = K.hcomp1(mf.one_cell, qmor.one_cell)
            gq = K.hcomp1(mg.one_cell, qmor.one_cell)
            for mu in K.two_cells_between(fq, gq):
                alg_side, cone_side = inserter_key_equation(
                    twist_monad, mf, mg, base, qmor, mu)
                if cone_side is not None:
                    assert alg_side == cone_side
                    checked += 1
    assert checked > 0


# ---------------------------------------------------------------------------
# dual forms (Remark 6.5)


def test_dual_form_matches_co_dual_transport(k_conj, twist_monad):
    # the coomega-variant lift of a sigma-omega limit equals the op-variant
    # lift run in the co-dual world, transcript for transcript
    K = k_conj
    om = omega_p(K)
    talg_co = build_talg(twist_monad, om, CO_OMEGA_VARIANT)
    shape = fx.k_term()
    sigma = all_arrows_family(shape)
    alg = sorted(talg_co.algebra_of.values(), key=lambda a: a.key())[0]
    Fbar = lifting._transport_diagram({"shape": shape, "objects": {"S": alg}}, talg_co)
    F = compose_two_functors(talg_co.forgetful, Fbar)
    base = limits.find_conical_limit(F, sigma, om, limits.OMEGA)
    res_co = lift_conical_op_limit(twist_monad, sigma, om, talg_co, Fbar, base, {},
                                   mode=MODE_CO)
    assert res_co.status == "pass"

    monad_dual = md.co_dual_monad(twist_monad)
    om_dual = co_dual(om)
    talg_dual = build_talg(monad_dual, om_dual)
    alg_dual = next(a for a in talg_dual.algebra_of.values() if a.key() == alg.key())
    shape_dual = co_dual(shape)
    Fbar_dual = lifting._transport_diagram(
        {"shape": shape_dual, "objects": {"S": alg_dual}}, talg_dual)
    F_dual = compose_two_functors(talg_dual.forgetful, Fbar_dual)
    sigma_dual = all_arrows_family(shape_dual)
    base_dual = limits.find_conical_limit(F_dual, sigma_dual, om_dual, limits.OMEGA_OP)
    res_op = lift_conical_op_limit(monad_dual, sigma_dual, om_dual, talg_dual, Fbar_dual,
                                   base_dual, {}, mode=MODE_OP)
    assert res_op.status == "pass"
    assert [(c, o) for c, o, _ in res_co.transcript] == [(c, o) for c, o, _ in res_op.transcript]
    assert res_co.lifted_algebra.key() == res_op.lifted_algebra.key()


# ---------------------------------------------------------------------------
# weighted lifts and corollaries


@pytest.fixture(scope="module")
def conj_inserter_spec(k_conj, twist_monad):
    talg = build_talg(twist_monad, omega_s(k_conj))
    algs = sorted(talg.algebra_of.values(), key=lambda a: a.key())
    algA, algB = algs
    mors = sorted((m for m in talg.morphism_of.values()
                   if m.source == algA and m.target == algB), key=lambda m: m.key())
    W = fx.inserter_weight()
    spec = {"shape": W.shape, "objects": {"a": algA, "b": algB},
            "morphisms": {"u": mors[0], "v": mors[1]}}
    return W, spec, mors


def test_weighted_op_lift_on_twist_monad(k_conj, twist_monad, conj_inserter_spec):
    # K_CONJ only carries the strict weighted limits (pseudo/lax cone
    # categories outgrow every hom there), so lift with Omega = Omega_s.
    W, spec, _ = conj_inserter_spec
    om = omega_s(k_conj)
    talg = build_talg(twist_monad, om)
    Fbar = lifting._transport_diagram(dict(spec), talg)
    res = lift_weighted_op_limit(twist_monad, all_arrows_family(W.shape), om, talg, W, Fbar,
                                 dict(canonical_omegas(k_conj)))
    assert res.status == "pass", res.transcript
    assert res.detection == {"s": "pass", "p": "pass", "l": "pass"}


def test_weighted_pseudo_limit_absent_in_k_conj(k_conj, twist_monad, conj_inserter_spec):
    # the same instance with Omega = Omega_p has no base weighted op-limit;
    # the lift reports the missing base as a precondition failure
    W, spec, _ = conj_inserter_spec
    om = omega_p(k_conj)
    talg = build_talg(twist_monad, om)
    Fbar = lifting._transport_diagram(dict(spec), talg)
    res = lift_weighted_op_limit(twist_monad, all_arrows_family(W.shape), om, talg, W, Fbar, {})
    assert res.status == "precondition-failed"
    assert isinstance(res.error, PreconditionFailure)


def test_corollary_strict_on_twist_monad(k_conj, twist_monad, conj_inserter_spec):
    W, spec, _ = conj_inserter_spec
    res = corollary_runner("strict", "s", twist_monad, W, dict(spec))
    assert res.status == "pass", res.transcript


@pytest.mark.parametrize("kind,gamma", [("oplax", "l"), ("oplax", "p"), ("oplax", "s"),
                                        ("sigma", "p"), ("sigma", "s"), ("strict", "s")])
def test_corollary_runners_on_terminal_monad(k_cat12, kind, gamma):
    K, fun_of, _ = k_cat12
    term = next(m for m in md.enumerate_monads(K) if m.endo.object_map["c2"] == "c1")
    W = fx.inserter_weight()
    talg_probe = build_talg(term, omega_l(K))
    alg1 = next(iter(talg_probe.algebra_of.values()))
    ident_mor = md.identity_weak_morphism(alg1)
    spec = {"shape": W.shape, "objects": {"a": alg1, "b": alg1},
            "morphisms": {"u": ident_mor, "v": ident_mor}}
    res = corollary_runner(kind, gamma, term, W, dict(spec))
    assert res.status == "pass", res.transcript
    if kind == "oplax":
        assert res.detection.get("s") == "pass"
        assert res.detection.get("p") == "pass"
    if kind == "sigma":
        assert res.detection.get("s") == "pass"


def test_corollary_runners_on_identity_monad(k_cat12):
    K, fun_of, _ = k_cat12
    T = ident(K)
    const0 = next(c for c, f in fun_of.items()
                  if c.endswith("<c2,c2>") and f.object_map == {"o0": "o0", "o1": "o0"})
    const1 = next(c for c, f in fun_of.items()
                  if c.endswith("<c2,c2>") and f.object_map == {"o0": "o1", "o1": "o1"})
    W = fx.inserter_weight()
    talg_probe = build_talg(T, omega_l(K))
    algc2 = next(a for a in talg_probe.algebra_of.values() if a.carrier == "c2")
    mf = next(m for m in talg_probe.morphism_of.values() if m.one_cell == const0)
    mg = next(m for m in talg_probe.morphism_of.values() if m.one_cell == const1)
    spec = {"shape": W.shape, "objects": {"a": algc2, "b": algc2},
            "morphisms": {"u": mf, "v": mg}}
    for kind, gamma in [("oplax", "l"), ("sigma", "p"), ("strict", "s")]:
        res = corollary_runner(kind, gamma, T, W, dict(spec))
        assert res.status == "pass", (kind, res.transcript)


def test_trivial_weight_weighted_equals_conical(k_cell):
    T = ident(k_cell)
    om = omega_l(k_cell)
    talg = build_talg(T, om)
    shape = fx.k_term()
    W = fx.trivial_weight(shape)
    algX = next(a for a in talg.algebra_of.values() if a.carrier == "X")
    Fbar = lifting._transport_diagram({"shape": shape, "objects": {"S": algX}}, talg)
    res = lift_weighted_op_limit(T, all_arrows_family(shape), om, talg, W, Fbar, {})
    assert res.status == "pass"
    conical_steps = [c for c, _, _ in res.transcript if c.startswith("elements:")]
    assert conical_steps  # reduction went through El_W


# ---------------------------------------------------------------------------
# jointly-monic pre-assertion


def test_joint_monicity_asserted(k_nc, k_disc2):
    from twocheck.twocat import validate_two_functor

    F = validate_two_functor("BB", k_disc2, k_nc,
                             {"a": "B", "b": "B"},
                             {"id_a": "oneB", "id_b": "oneB"},
                             {"i_id_a": "z0_oneB", "i_id_b": "z0_oneB"})
    cert = limits.find_conical_limit(F, all_arrows_family(k_disc2), omega_s(k_nc),
                                     limits.OMEGA_OP)
    assert lifting.joint_monicity_holds(k_nc, cert.cone)

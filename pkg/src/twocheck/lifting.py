"""Limit lifting along the forgetful 2-functor, executed then re-verified.

Each lift constructs the candidate algebra structure on the base limit
vertex exactly as in the source results (products/inserters/equifiers and
the conical op-limit theorem), then re-checks every conclusion exhaustively
inside the constructed T-Alg 2-category: algebra laws, strictness of the
projections, the algebra-2-cell status of the structural cone cells, the
full 1- and 2-dimensional universal property, and joint detection for each
compatible family.  Nothing is taken on faith from the base certificate
beyond the constructions it licenses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import elements as elements_mod
from . import limits as limits_mod
from . import monad as monad_mod
from .errors import (
    EquifyFailure,
    MediatorMissing,
    NotCompatible,
    NotInvertible,
    PreconditionFailure,
    SubsetFailure,
    TwoCheckError,
    VerificationFailure,
)
from .limits import OMEGA, OMEGA_OP, ConicalCone, certify_cone, check_compatibility, special_limit_check
from .monad import OMEGA_VARIANT, CO_OMEGA_VARIANT
from .twocat import validate_cell_family, validate_two_functor

MODE_OP = "op"          # Theorem: T-Alg_omega, base sigma-omega-op limit
MODE_CO = "co"          # dual form: T-Alg_coomega, base sigma-omega limit
MODE_INV = "inv"        # invertible-structural-cell form: T-Alg_omega, base sigma-omega limit


@dataclass
class LiftResult:
    status: str                   # "pass" | "precondition-failed" | "verification-failed"
    transcript: list
    lifted_algebra: object = None
    lifted_cone: object = None
    certificate: object = None
    detection: dict = field(default_factory=dict)
    error: object = None

    def note(self, check, ok, witness=""):
        self.transcript.append((check, "pass" if ok else "fail", str(witness)))
        return ok

    def not_applicable(self, check, witness=""):
        self.transcript.append((check, "not-applicable", str(witness)))

    def fail_pre(self, error):
        self.status = "precondition-failed"
        self.error = error
        self.transcript.append((f"precondition:{type(error).__name__}", "fail", str(error)))
        return self

    def fail_verify(self, error):
        self.status = "verification-failed"
        self.error = error
        self.transcript.append((f"verification:{type(error).__name__}", "fail", str(error)))
        return self


def _unique_mediator(K, E, L, predicate):
    found = [h for h in K.homs[(E, L)].objects if predicate(h)]
    if len(found) != 1:
        return None
    return found[0]


def joint_monicity_holds(K, cone):
    """Parallel 2-cells into the vertex that agree after whiskering with all
    projections are equal (consequence of the 2-dimensional property)."""
    L = cone.vertex
    proj = list(cone.component_1.values())
    for B in K.objects:
        hom = K.homs[(B, L)]
        for b1 in hom.morphisms:
            for b2 in hom.morphisms:
                if b1 >= b2 or hom.source[b1] != hom.source[b2] or hom.target[b1] != hom.target[b2]:
                    continue
                if all(K.hcomp2(K.id2(p), b1) == K.hcomp2(K.id2(p), b2) for p in proj):
                    return False
    return True


# ---------------------------------------------------------------------------
# Products, inserters, equifiers (the strict-limit lifting results)


def lift_product(monad, omega, talg, algebras, base_report, omega_primes=None):
    """Lift an Omega-compatible product of carriers to T-Alg."""
    K = monad.base
    res = LiftResult("pass", [])
    omega_primes = omega_primes or {}
    if base_report.kind != "product" or not base_report.ok:
        return res.fail_pre(MediatorMissing("base product certificate defective"))
    if not check_special_compatibility(base_report, omega):
        return res.fail_pre(NotCompatible("base product is not Omega-compatible"))
    P = base_report.candidate["vertex"]
    projections = list(base_report.candidate["projections"])
    carriers = [alg.carrier for alg in algebras]
    if list(base_report.data["objects"]) != carriers:
        return res.fail_pre(MediatorMissing("base product is not over the algebra carriers"))

    structure = _unique_mediator(
        K, monad.T_obj(P), P,
        lambda h: all(
            K.hcomp1(p, h) == K.hcomp1(alg.structure, monad.T_one(p))
            for p, alg in zip(projections, algebras)
        ),
    )
    if structure is None:
        return res.fail_verify(MediatorMissing("no unique algebra structure on the product"))
    try:
        lifted = monad_mod.validate_algebra(monad, P, structure)
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("algebra-laws", True, structure)
    res.lifted_algebra = lifted

    K2 = talg.two_category
    proj_ids = []
    for p, alg in zip(projections, algebras):
        try:
            mor = monad_mod.validate_weak_morphism(
                monad, lifted, alg, p, K.id2(K.hcomp1(p, structure)), talg.omega, talg.variant
            )
        except TwoCheckError as exc:
            return res.fail_verify(exc)
        proj_ids.append(talg.one_cell_of(mor))
    res.note("projections-strict", True, ",".join(proj_ids))

    report = special_limit_check(
        K2, "product",
        {"objects": [talg.object_of_algebra(a) for a in algebras]},
        {"vertex": talg.object_of_algebra(lifted), "projections": proj_ids},
    )
    if not res.note("universal-property-talg", report.ok, report.check_failed() or ""):
        return res.fail_verify(VerificationFailure("product universal property fails in T-Alg"))
    res.certificate = report

    for name, fam in omega_primes.items():
        if check_special_compatibility(base_report, fam, name):
            ok = monad_mod.detects_omega_prime(talg, proj_ids, fam)
            if not res.note(f"detect:{name}", ok):
                return res.fail_verify(VerificationFailure(f"detection fails for {name}"))
            res.detection[name] = "pass"
        else:
            res.not_applicable(f"detect:{name}", "base not compatible")
            res.detection[name] = "not-applicable"
    return res


def check_special_compatibility(base_report, family, name=None):
    """Recompute the specialized compatibility implication for a family."""
    report = special_limit_check(
        base_report.base, base_report.kind, base_report.data, base_report.candidate,
        {"q": family},
    )
    return report.compatibility.get("q", True)


def lift_inserter(monad, omega, talg, mor_f, mor_g, base_report, omega_primes=None, kind="inserter"):
    """Prop-style inserter lift: requires fbar invertible (and gbar too for
    the iso-inserter variant) and an Omega-compatible base inserter."""
    K = monad.base
    res = LiftResult("pass", [])
    omega_primes = omega_primes or {}
    fbar_inv = K.vertical_inverse(mor_f.structural)
    if fbar_inv is None:
        return res.fail_pre(NotInvertible("fbar is not invertible", cell=mor_f.structural))
    if kind == "iso-inserter" and K.vertical_inverse(mor_g.structural) is None:
        return res.fail_pre(NotInvertible("gbar is not invertible", cell=mor_g.structural))
    if base_report.kind not in ("inserter", "iso-inserter") or not base_report.ok:
        return res.fail_pre(MediatorMissing("base inserter certificate defective"))
    if not check_special_compatibility(base_report, omega):
        return res.fail_pre(NotCompatible("base inserter is not Omega-compatible"))

    f, g = mor_f.one_cell, mor_g.one_cell
    if base_report.data["f"] != f or base_report.data["g"] != g:
        return res.fail_pre(MediatorMissing("base inserter is not over (f, g)"))
    A_, p, lam = base_report.candidate["vertex"], base_report.candidate["p"], base_report.candidate["lam"]
    b = mor_f.source.structure
    c = mor_f.target.structure
    Tp = monad.T_one(p)
    q = K.hcomp1(b, Tp)
    mu = K.vcomp(
        K.hcomp2(mor_g.structural, K.id2(Tp)),
        K.vcomp(
            K.hcomp2(K.id2(c), monad.T_two(lam)),
            K.hcomp2(fbar_inv, K.id2(Tp)),
        ),
    )
    structure = _unique_mediator(
        K, monad.T_obj(A_), A_,
        lambda h: K.hcomp1(p, h) == q and K.hcomp2(lam, K.id2(h)) == mu,
    )
    if structure is None:
        return res.fail_verify(MediatorMissing("no unique algebra structure on the inserter"))
    try:
        lifted = monad_mod.validate_algebra(monad, A_, structure)
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("algebra-laws", True, structure)
    res.lifted_algebra = lifted

    try:
        proj = monad_mod.validate_weak_morphism(
            monad, lifted, mor_f.source, p, K.id2(K.hcomp1(p, structure)), talg.omega, talg.variant
        )
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("projection-strict", True, p)

    fp = monad_mod.compose_weak_morphisms(mor_f, proj)
    gp = monad_mod.compose_weak_morphisms(mor_g, proj)
    try:
        lam_cell = monad_mod.validate_algebra_two_cell(fp, gp, lam)
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("lambda-algebra-2-cell", True, lam)

    K2 = talg.two_category
    report = special_limit_check(
        K2, kind,
        {"f": talg.one_cell_of(mor_f), "g": talg.one_cell_of(mor_g)},
        {"vertex": talg.object_of_algebra(lifted), "p": talg.one_cell_of(proj),
         "lam": talg.two_cell_of(lam_cell)},
    )
    if not res.note("universal-property-talg", report.ok, report.check_failed() or ""):
        return res.fail_verify(VerificationFailure("inserter universal property fails in T-Alg"))
    res.certificate = report

    for name, fam in omega_primes.items():
        if check_special_compatibility(base_report, fam, name):
            ok = monad_mod.detects_omega_prime(talg, [talg.one_cell_of(proj)], fam)
            if not res.note(f"detect:{name}", ok):
                return res.fail_verify(VerificationFailure(f"detection fails for {name}"))
            res.detection[name] = "pass"
        else:
            res.not_applicable(f"detect:{name}")
            res.detection[name] = "not-applicable"
    return res


def inserter_key_equation(monad, mor_f, mor_g, base_report, qmor, mu):
    """The two sides of the key observation in the inserter lifting proof.

    Returns (alg2cell, cone_morphism): whether mu is an algebra 2-cell
    between the composites (f,fbar).(q,qbar) and (g,gbar).(q,qbar), and
    whether qbar is a morphism between the two induced inserter cones.
    Provable equivalent; asserted over all enumerated candidates in tests.
    """
    K = monad.base
    fq = monad_mod.compose_weak_morphisms(mor_f, qmor)
    gq = monad_mod.compose_weak_morphisms(mor_g, qmor)
    alg2cell = monad_mod.algebra_cell_equation_holds(monad, fq, gq, mu, qmor.variant)

    A_, p, lam = base_report.candidate["vertex"], base_report.candidate["p"], base_report.candidate["lam"]
    structure = _lift_inserter_structure(monad, mor_f, mor_g, base_report)
    D = qmor.source.carrier
    d = qmor.source.structure
    q = qmor.one_cell
    h = _unique_mediator(
        K, D, A_,
        lambda x: K.hcomp1(p, x) == q and K.hcomp2(lam, K.id2(x)) == mu,
    )
    if h is None or structure is None:
        return alg2cell, None
    f, g = mor_f.one_cell, mor_g.one_cell
    Th = monad.T_one(h)
    lhs = K.vcomp(
        K.hcomp2(lam, K.id2(K.hcomp1(h, d))),
        K.hcomp2(K.id2(f), qmor.structural),
    )
    rhs = K.vcomp(
        K.hcomp2(K.id2(g), qmor.structural),
        K.hcomp2(lam, K.id2(K.hcomp1(structure, Th))),
    )
    return alg2cell, lhs == rhs


def _lift_inserter_structure(monad, mor_f, mor_g, base_report):
    K = monad.base
    fbar_inv = K.vertical_inverse(mor_f.structural)
    A_, p, lam = base_report.candidate["vertex"], base_report.candidate["p"], base_report.candidate["lam"]
    b, c = mor_f.source.structure, mor_f.target.structure
    Tp = monad.T_one(p)
    q = K.hcomp1(b, Tp)
    mu = K.vcomp(
        K.hcomp2(mor_g.structural, K.id2(Tp)),
        K.vcomp(K.hcomp2(K.id2(c), monad.T_two(lam)), K.hcomp2(fbar_inv, K.id2(Tp))),
    )
    return _unique_mediator(
        K, monad.T_obj(A_), A_,
        lambda h: K.hcomp1(p, h) == q and K.hcomp2(lam, K.id2(h)) == mu,
    )


def lift_equifier(monad, omega, talg, cell_a, cell_b, base_report, omega_primes=None):
    """Lift an Omega-compatible equifier of algebra 2-cells (fbar invertible)."""
    K = monad.base
    res = LiftResult("pass", [])
    omega_primes = omega_primes or {}
    mor_f, mor_g = cell_a.source, cell_a.target
    if cell_b.source != mor_f or cell_b.target != mor_g:
        return res.fail_pre(MediatorMissing("2-cells not parallel"))
    if K.vertical_inverse(mor_f.structural) is None:
        return res.fail_pre(NotInvertible("fbar is not invertible", cell=mor_f.structural))
    if base_report.kind != "equifier" or not base_report.ok:
        return res.fail_pre(MediatorMissing("base equifier certificate defective"))
    if not check_special_compatibility(base_report, omega):
        return res.fail_pre(NotCompatible("base equifier is not Omega-compatible"))
    if base_report.data["alpha"] != cell_a.two_cell or base_report.data["beta"] != cell_b.two_cell:
        return res.fail_pre(MediatorMissing("base equifier is not over (alpha, beta)"))

    A_, p = base_report.candidate["vertex"], base_report.candidate["p"]
    b = mor_f.source.structure
    q = K.hcomp1(b, monad.T_one(p))
    if K.hcomp2(cell_a.two_cell, K.id2(q)) != K.hcomp2(cell_b.two_cell, K.id2(q)):
        return res.fail_verify(EquifyFailure("b.Tp does not equify alpha and beta", q=q))
    res.note("b.Tp-equifies", True, q)

    structure = _unique_mediator(K, monad.T_obj(A_), A_, lambda h: K.hcomp1(p, h) == q)
    if structure is None:
        return res.fail_verify(MediatorMissing("no unique algebra structure on the equifier"))
    try:
        lifted = monad_mod.validate_algebra(monad, A_, structure)
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("algebra-laws", True, structure)
    res.lifted_algebra = lifted

    try:
        proj = monad_mod.validate_weak_morphism(
            monad, lifted, mor_f.source, p, K.id2(K.hcomp1(p, structure)), talg.omega, talg.variant
        )
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("projection-strict", True, p)

    K2 = talg.two_category
    report = special_limit_check(
        K2, "equifier",
        {"alpha": talg.two_cell_of(cell_a), "beta": talg.two_cell_of(cell_b)},
        {"vertex": talg.object_of_algebra(lifted), "p": talg.one_cell_of(proj)},
    )
    if not res.note("universal-property-talg", report.ok, report.check_failed() or ""):
        return res.fail_verify(VerificationFailure("equifier universal property fails in T-Alg"))
    res.certificate = report

    for name, fam in omega_primes.items():
        if check_special_compatibility(base_report, fam, name):
            ok = monad_mod.detects_omega_prime(talg, [talg.one_cell_of(proj)], fam)
            if not res.note(f"detect:{name}", ok):
                return res.fail_verify(VerificationFailure(f"detection fails for {name}"))
            res.detection[name] = "pass"
        else:
            res.not_applicable(f"detect:{name}")
            res.detection[name] = "not-applicable"
    return res


# ---------------------------------------------------------------------------
# The conical lifting theorem and its dual/invertible forms


def _mode_profile(mode):
    """(T-Alg variant, base orientation) per construction mode."""
    if mode == MODE_OP:
        return OMEGA_VARIANT, OMEGA_OP
    if mode == MODE_CO:
        return CO_OMEGA_VARIANT, OMEGA
    if mode == MODE_INV:
        return OMEGA_VARIANT, OMEGA
    raise TwoCheckError(f"unknown mode {mode!r}")


def lift_conical_op_limit(monad, sigma, omega, talg, Fbar, base_cert, omega_pprimes=None, mode=MODE_OP):
    """Theorem-style lift of a conical sigma-omega(op)-limit to T-Alg.

    talg governs the morphisms (its family is the Omega' of the statement);
    Fbar: shape -> talg; base_cert certifies the sigma-omega(op)-limit of
    U.Fbar in the base and must be compatible with talg's family.
    """
    K = monad.base
    res = LiftResult("pass", [])
    omega_pprimes = omega_pprimes or {}
    variant, base_orientation = _mode_profile(mode)
    if talg.variant != variant:
        return res.fail_pre(PreconditionFailure(f"T-Alg variant must be {variant} for mode {mode}"))

    if not res.note("T-preserves-omega", monad_mod.monad_preserves_family(monad, omega)):
        return res.fail_pre(PreconditionFailure("T(Omega) is not contained in Omega"))

    shape = Fbar.source
    structural = {f: talg.morphism_of[Fbar.one_map[f]].structural for f in shape.one_cells}
    if mode in (MODE_OP, MODE_CO):
        bad = [f for f in sigma.members if structural[f] not in omega.members]
        if bad:
            return res.fail_pre(PreconditionFailure(
                "structural cell of Fbar(f) outside Omega for f in Sigma",
                cells={f: structural[f] for f in bad}))
        res.note("sigma-condition", True)
    else:
        inverses = {}
        for f in shape.one_cells:
            inv = K.vertical_inverse(structural[f])
            if inv is None:
                return res.fail_pre(NotInvertible("structural cell of Fbar(f) not invertible", cell=structural[f]))
            inverses[f] = inv
        bad = [f for f in sigma.members if inverses[f] not in omega.members]
        if bad:
            return res.fail_pre(PreconditionFailure(
                "inverse structural cell outside Omega for f in Sigma", cells=bad))
        res.note("sigma-condition", True)

    if base_cert is None or base_cert.orientation != base_orientation:
        return res.fail_pre(PreconditionFailure("base certificate missing or wrongly oriented"))
    F = base_cert.diagram
    for f in shape.one_cells:
        if F.one_map[f] != talg.morphism_of[Fbar.one_map[f]].one_cell:
            return res.fail_pre(PreconditionFailure("base diagram is not U.Fbar", cell=f))
    if not res.note("base-omega-prime-compatible", check_compatibility(base_cert, talg.omega)):
        return res.fail_pre(NotCompatible("base limit is not compatible with the morphism family"))

    if not res.note("jointly-monic", joint_monicity_holds(K, base_cert.cone)):
        return res.fail_pre(PreconditionFailure("projections are not jointly monic"))

    L = base_cert.vertex
    pi1 = base_cert.cone.component_1
    pi2 = base_cert.cone.component_2
    TL = monad.T_obj(L)
    alg_of = {A: talg.morphism_of[Fbar.one_map[shape.id1(A)]].source for A in shape.objects}
    # note: Fbar(1_A) is the identity morphism of the algebra Fbar(A)

    theta1 = {A: K.hcomp1(alg_of[A].structure, monad.T_one(pi1[A])) for A in shape.objects}
    theta2 = {}
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        tpa = monad.T_one(pi1[A])
        tpf = monad.T_two(pi2[f])
        b_struct = alg_of[B].structure
        if mode == MODE_OP:
            theta2[f] = K.vcomp(
                K.hcomp2(structural[f], K.id2(tpa)),
                K.hcomp2(K.id2(b_struct), tpf),
            )
        elif mode == MODE_CO:
            theta2[f] = K.vcomp(
                K.hcomp2(K.id2(b_struct), tpf),
                K.hcomp2(structural[f], K.id2(tpa)),
            )
        else:
            theta2[f] = K.vcomp(
                K.hcomp2(K.id2(b_struct), tpf),
                K.hcomp2(inverses[f], K.id2(tpa)),
            )
    try:
        theta = limits_mod.validate_conical_cone(F, TL, theta1, theta2, base_orientation)
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    in_omega = all(theta2[f] in omega.members for f in sigma.members)
    if not res.note("theta-in-omega", in_omega):
        return res.fail_verify(VerificationFailure("constructed cone leaves Omega"))

    # the unique mediator, from the certificate's bijection table and re-derived
    cc = base_cert.cones_categories[TL]
    theta_id = cc.cone_index.get(theta.key())
    if theta_id is None:
        return res.fail_verify(VerificationFailure("constructed cone is not a sigma-omega cone"))
    inverse_table = {cone_id: h for h, cone_id in base_cert.tables[TL]["objects"].items()}
    structure = inverse_table.get(theta_id)
    rederived = _unique_mediator(
        K, TL, L,
        lambda h: all(K.hcomp1(pi1[A], h) == theta1[A] for A in shape.objects)
        and all(K.hcomp2(pi2[f], K.id2(h)) == theta2[f] for f in shape.one_cells),
    )
    if structure is None or rederived != structure:
        return res.fail_verify(MediatorMissing("mediator mismatch between table and re-derivation"))
    res.note("mediator-unique", True, structure)

    try:
        lifted = monad_mod.validate_algebra(monad, L, structure)
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.note("algebra-laws", True, structure)
    res.lifted_algebra = lifted

    lifted_c1, lifted_c2 = {}, {}
    for A in shape.objects:
        try:
            mor = monad_mod.validate_weak_morphism(
                monad, lifted, alg_of[A], pi1[A], K.id2(theta1[A]), talg.omega, variant
            )
        except TwoCheckError as exc:
            return res.fail_verify(exc)
        lifted_c1[A] = talg.one_cell_of(mor)
    res.note("projections-strict", True)

    K2 = talg.two_category
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        if base_orientation == OMEGA_OP:
            src_mor = talg.morphism_of[lifted_c1[B]]
            tgt_mor = monad_mod.compose_weak_morphisms(
                talg.morphism_of[Fbar.one_map[f]], talg.morphism_of[lifted_c1[A]]
            )
        else:
            src_mor = monad_mod.compose_weak_morphisms(
                talg.morphism_of[Fbar.one_map[f]], talg.morphism_of[lifted_c1[A]]
            )
            tgt_mor = talg.morphism_of[lifted_c1[B]]
        try:
            cell = monad_mod.validate_algebra_two_cell(src_mor, tgt_mor, pi2[f])
        except TwoCheckError as exc:
            return res.fail_verify(exc)
        lifted_c2[f] = talg.two_cell_of(cell)
    res.note("pi_f-algebra-2-cells", True)

    try:
        lifted_cone = limits_mod.validate_conical_cone(
            Fbar, talg.object_of_algebra(lifted), lifted_c1, lifted_c2, base_orientation
        )
    except TwoCheckError as exc:
        return res.fail_verify(exc)
    res.lifted_cone = lifted_cone

    obar = monad_mod.omega_bar(talg, omega)
    cert = certify_cone(Fbar, sigma, obar, lifted_cone, base_orientation)
    if not res.note("universal-property-talg", cert is not None):
        return res.fail_verify(VerificationFailure("lifted cone is not a limit in T-Alg"))
    res.certificate = cert

    preserved = all(
        talg.forgetful.one_map[lifted_c1[A]] == pi1[A] for A in shape.objects
    ) and all(talg.forgetful.two_map[lifted_c2[f]] == pi2[f] for f in shape.one_cells)
    if not res.note("preserved-by-U", preserved):
        return res.fail_verify(VerificationFailure("forgetful image differs from the base cone"))

    for name, fam in omega_pprimes.items():
        if check_compatibility(base_cert, fam):
            ok = monad_mod.detects_omega_prime(talg, list(lifted_c1.values()), fam)
            if not res.note(f"detect:{name}", ok):
                return res.fail_verify(VerificationFailure(f"detection fails for {name}"))
            res.detection[name] = "pass"
        else:
            res.not_applicable(f"detect:{name}", "base not compatible")
            res.detection[name] = "not-applicable"
    return res


def lift_weighted_op_limit(monad, sigma, omega, talg, W, Fbar, omega_pprimes=None, mode=MODE_OP,
                           budget=None):
    """Weighted corollary: reduce through El_W to the conical theorem, then
    transport back and re-verify the weighted universal property directly."""
    K = monad.base
    res = LiftResult("pass", [])
    variant, base_orientation = _mode_profile(mode)
    if not omega.members >= talg.omega.members:
        return res.fail_pre(SubsetFailure("Omega' must be contained in Omega"))
    res.note("omega-prime-subset", True)

    el = elements_mod.build_elements(W, sigma, budget=budget)
    from .twocat import compose_two_functors

    Fbar_el = compose_two_functors(Fbar, el.projection)
    F_el = compose_two_functors(talg.forgetful, Fbar_el)
    base_cert = limits_mod.find_conical_limit(F_el, el.id_sigma, omega, base_orientation, budget=budget)
    if base_cert is None:
        return res.fail_pre(PreconditionFailure("base conical limit over El_W does not exist"))
    res.note("base-limit-found", True, base_cert.vertex)

    conical = lift_conical_op_limit(monad, el.id_sigma, omega, talg, Fbar_el, base_cert,
                                    omega_pprimes, mode)
    res.transcript.extend(("elements:" + c, o, w) for c, o, w in conical.transcript)
    if conical.status != "pass":
        res.status = conical.status
        res.error = conical.error
        return res
    res.lifted_algebra = conical.lifted_algebra
    res.detection = conical.detection

    weighted_cone = elements_mod.conical_to_weighted_cone(el, conical.lifted_cone, W, Fbar)
    res.lifted_cone = weighted_cone
    correspond = all(
        weighted_cone.comp_obj[(A, x)] == conical.lifted_cone.component_1[el.object_index[(x, A)]]
        for oid, (x, A) in el.object_data.items()
    )
    if not res.note("projection-correspondence", correspond):
        return res.fail_verify(VerificationFailure("xi_A(x) != pi_(x,A)"))

    obar = monad_mod.omega_bar(talg, omega)
    wcert = limits_mod.certify_weighted_cone(W, Fbar, sigma, obar, weighted_cone, base_orientation,
                                             budget=budget)
    if not res.note("weighted-universal-property", wcert is not None):
        return res.fail_verify(VerificationFailure("weighted universal property fails in T-Alg"))
    res.certificate = wcert
    return res


def corollary_runner(kind, gamma, monad, W, Fbar, sigma=None, budget=None):
    """The specialized corollary runners.

    kind "oplax": Omega = Omega_l, Sigma = identities, any gamma; asserts
    detection of strictness and pseudoness.  kind "sigma": Omega = Omega_p,
    gamma in {p, s}, arbitrary Sigma; asserts strictness detection.  kind
    "strict": Omega = Omega_s, gamma = s.
    """
    from .twocat import canonical_omegas, identity_arrows_family, all_arrows_family

    K = monad.base
    omegas = canonical_omegas(K)
    shape = W.shape
    if kind == "oplax":
        if gamma not in ("s", "p", "l"):
            raise TwoCheckError("gamma must be one of s, p, l")
        omega = omegas["l"]
        sigma = identity_arrows_family(shape)
        mode = MODE_OP
        detect = {"s": omegas["s"], "p": omegas["p"]}
    elif kind == "sigma":
        if gamma not in ("s", "p"):
            raise TwoCheckError("gamma must be s or p for the sigma runner")
        omega = omegas["p"]
        sigma = sigma or all_arrows_family(shape)
        mode = MODE_INV
        detect = {"s": omegas["s"]}
    elif kind == "strict":
        if gamma != "s":
            raise TwoCheckError("gamma must be s for the strict runner")
        omega = omegas["s"]
        sigma = sigma or all_arrows_family(shape)
        mode = MODE_INV
        detect = {}
    else:
        raise TwoCheckError(f"unknown corollary kind {kind!r}")

    talg = monad_mod.build_talg(monad, omegas[gamma], _mode_profile(mode)[0], budget=budget)
    Fbar_t = _transport_diagram(Fbar, talg)
    result = lift_weighted_op_limit(monad, sigma, omega, talg, W, Fbar_t, detect, mode, budget)
    for name in detect:
        if result.status == "pass" and result.detection.get(name) not in ("pass", "not-applicable"):
            return result.fail_verify(VerificationFailure(f"corollary detection claim fails for {name}"))
    return result


def _transport_diagram(Fbar_spec, talg):
    """Accept either a ready TwoFunctor into talg or a spec dict with
    algebra/morphism/cell assignments, and return the TwoFunctor."""
    if not isinstance(Fbar_spec, dict):
        return Fbar_spec
    shape = Fbar_spec["shape"]
    object_map = {A: talg.object_of_algebra(alg) for A, alg in Fbar_spec["objects"].items()}
    one_map = {}
    for A in shape.objects:
        one_map[shape.id1(A)] = talg.two_category.id1(object_map[A])
    for f, mor in Fbar_spec.get("morphisms", {}).items():
        one_map[f] = talg.one_cell_of(mor)
    changed = True
    while changed:
        changed = False
        for g in shape.one_cells:
            for f in shape.one_cells:
                if shape.tgt1(f) != shape.src1(g):
                    continue
                gf = shape.hcomp1(g, f)
                if gf not in one_map and g in one_map and f in one_map:
                    one_map[gf] = talg.two_category.hcomp1(one_map[g], one_map[f])
                    changed = True
    two_map = {}
    for f, cid in one_map.items():
        two_map[shape.id2(f)] = talg.two_category.id2(cid)
    for alpha, cell in Fbar_spec.get("cells", {}).items():
        two_map[alpha] = talg.two_cell_of(cell)
    _complete_two_cells(shape, talg.two_category, two_map)
    return validate_two_functor("Fbar", shape, talg.two_category, object_map, one_map, two_map)


def _complete_two_cells(shape, K2, two_map):
    changed = True
    while changed:
        changed = False
        for pair in [(a, b) for a in shape.objects for b in shape.objects]:
            hom = shape.homs[pair]
            for beta in hom.morphisms:
                for alpha in hom.morphisms:
                    if hom.target[alpha] != hom.source[beta]:
                        continue
                    c = hom.compose(beta, alpha)
                    if c not in two_map and beta in two_map and alpha in two_map:
                        two_map[c] = K2.vcomp(two_map[beta], two_map[alpha])
                        changed = True
        for beta in shape.two_cells:
            for alpha in shape.two_cells:
                if shape.two_cell_hom[alpha][1] != shape.two_cell_hom[beta][0]:
                    continue
                c = shape.hcomp2(beta, alpha)
                if c not in two_map and beta in two_map and alpha in two_map:
                    two_map[c] = K2.hcomp2(two_map[beta], two_map[alpha])
                    changed = True

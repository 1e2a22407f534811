import pytest

from twocheck import fixtures as fx, monad as md
from twocheck.errors import (
    CoherenceUnit,
    MonadLaw,
    NaturalityViolation,
    NotInOmega,
    TwoCheckError,
)
from twocheck.monad import (
    CO_OMEGA_VARIANT,
    OMEGA_VARIANT,
    build_talg,
    compose_weak_morphisms,
    detects_omega_prime,
    enumerate_algebra_two_cells,
    enumerate_algebras,
    enumerate_monads,
    enumerate_weak_morphisms,
    identity_monad,
    identity_weak_morphism,
    monad_preserves_family,
    omega_bar,
    reversal_isomorphism,
    validate_algebra_two_cell,
    validate_monad,
    validate_weak_morphism,
)
from twocheck.twocat import (
    canonical_omegas,
    co_dual,
    generated_cell_family,
    omega_l,
    omega_p,
    omega_s,
    validate_two_category,
    validate_two_functor,
)

import oracles


def ident(K):
    monad = identity_monad(K)
    return validate_monad(K, monad.endo, monad.mult, monad.unit)


def test_identity_monad_valid_everywhere(all_bases):
    for K in all_bases:
        ident(K)


def test_k_idem_bad_mult_fails_unit_law(k_idem):
    monad = identity_monad(k_idem)
    with pytest.raises(MonadLaw):
        validate_monad(k_idem, monad.endo, {"S": "t"}, {"S": "id_S"})


def test_non_natural_unit_detected(k_conj):
    monad = identity_monad(k_conj)
    # unit g1 at A only: not natural against the cross 1-cells
    unit = {x: k_conj.id1(x) for x in k_conj.objects}
    unit["A"] = "g1_AA"
    with pytest.raises((NaturalityViolation, MonadLaw)):
        validate_monad(k_conj, monad.endo, dict(monad.mult), unit)


# pinned fixture constants, derived first with the brute-force oracle
@pytest.mark.parametrize("base,count", [("k_term", 1), ("k_idem", 1), ("k_z2", 2)])
def test_enumerate_monads_pinned(base, count):
    K = getattr(fx, base)()
    assert oracles.count_monads_brute(K) == count
    monads = enumerate_monads(K)
    assert len(monads) == count
    for monad in monads:
        validate_monad(K, monad.endo, monad.mult, monad.unit)


def test_enumerate_monads_k_cell(k_cell):
    monads = enumerate_monads(k_cell)
    assert len(monads) == oracles.count_monads_brute(k_cell) == 1


def test_monad_preserves_family(k_proj, proj_monad):
    for om in canonical_omegas(k_proj).values():
        assert monad_preserves_family(proj_monad, om)
    gen = generated_cell_family(k_proj, ["al2"])
    assert not monad_preserves_family(proj_monad, gen)
    assert proj_monad.endo.two_map["al2"] == "al"  # the witness


def test_identity_monad_preserves_everything(all_bases):
    for K in all_bases:
        T = ident(K)
        for om in canonical_omegas(K).values():
            assert monad_preserves_family(T, om)


# ---------------------------------------------------------------------------
# algebras, weak morphisms, algebra 2-cells


def test_identity_monad_collapse_tables(k_cell):
    T = ident(k_cell)
    algebras = enumerate_algebras(T)
    assert {a.carrier for a in algebras} == set(k_cell.objects)
    assert all(a.structure == k_cell.id1(a.carrier) for a in algebras)
    om = omega_l(k_cell)
    by_carrier = {a.carrier: a for a in algebras}
    total = 0
    for a in algebras:
        for b in algebras:
            mors = enumerate_weak_morphisms(T, a, b, om)
            for mor in mors:
                assert k_cell.homs[k_cell.two_cell_hom[mor.structural]].is_identity(mor.structural)
            total += len(mors)
    assert total == len(k_cell.one_cells)


def test_weak_morphism_not_in_omega(k_nc):
    # identity monad on K_NC: the structural slot of the diagonal has a
    # nonidentity endo-cell z11_diag; it fails Omega_s membership first, and
    # unit coherence once the family admits it
    T = ident(k_nc)
    algebras = enumerate_algebras(T)
    algB = next(a for a in algebras if a.carrier == "B")
    algL = next(a for a in algebras if a.carrier == "L")
    with pytest.raises(NotInOmega):
        validate_weak_morphism(T, algB, algL, "diag", "z11_diag", omega_s(k_nc))
    with pytest.raises(CoherenceUnit):
        validate_weak_morphism(T, algB, algL, "diag", "z11_diag", omega_l(k_nc))


def test_reversal_of_invertible_structural_cell(k_conj, twist_monad):
    om = omega_p(k_conj)
    talg = build_talg(twist_monad, om, OMEGA_VARIANT)
    talg_co = build_talg(twist_monad, om, CO_OMEGA_VARIANT)
    functor = reversal_isomorphism(talg, talg_co)
    assert len(functor.object_map) == len(talg.algebra_of)


def test_compose_weak_morphisms_unit_and_associativity(k_conj, twist_monad):
    om = omega_p(k_conj)
    talg = build_talg(twist_monad, om)
    mors = list(talg.morphism_of.values())
    for mor in mors:
        left = compose_weak_morphisms(identity_weak_morphism(mor.target), mor)
        right = compose_weak_morphisms(mor, identity_weak_morphism(mor.source))
        assert left == mor and right == mor
    for m1 in mors:
        for m2 in mors:
            if m1.target != m2.source:
                continue
            for m3 in mors:
                if m2.target != m3.source:
                    continue
                assert compose_weak_morphisms(m3, compose_weak_morphisms(m2, m1)) == \
                    compose_weak_morphisms(compose_weak_morphisms(m3, m2), m1)


def test_strict_composites_strict(k_conj, twist_monad):
    K = k_conj

    def is_strict(mor):
        return K.homs[K.two_cell_hom[mor.structural]].is_identity(mor.structural)

    talg = build_talg(twist_monad, omega_p(K))
    for m1 in talg.morphism_of.values():
        for m2 in talg.morphism_of.values():
            if m1.target == m2.source and is_strict(m1) and is_strict(m2):
                assert is_strict(compose_weak_morphisms(m2, m1))


def test_algebra_two_cells_automatic_on_finite_bases(k_conj, twist_monad):
    # Companion of the strictness theorem: whiskering the two sides of the
    # algebra-2-cell equation by the invertible unit reduces both to alpha,
    # so every parallel 2-cell qualifies.  Assert it exhaustively.
    talg = build_talg(twist_monad, omega_p(k_conj))
    mors = list(talg.morphism_of.values())
    for m1 in mors:
        for m2 in mors:
            if m1.source != m2.source or m1.target != m2.target:
                continue
            candidates = k_conj.two_cells_between(m1.one_cell, m2.one_cell)
            cells = enumerate_algebra_two_cells(m1, m2)
            assert len(cells) == len(candidates)


def test_algebra_cell_axiom_rejects_doctored_morphism(k_nc):
    # The equation itself is enforced: against a hand-doctored (invalid)
    # weak morphism carrying a nonidentity structural cell, the identity
    # 2-cell fails eq-alg2cell and is rejected.
    from twocheck.monad import AlgebraTwoCell, WeakMorphism

    T = ident(k_nc)
    algebras = enumerate_algebras(T)
    algB = next(a for a in algebras if a.carrier == "B")
    algL = next(a for a in algebras if a.carrier == "L")
    strict = validate_weak_morphism(T, algB, algL, "diag", "z00_diag", omega_l(k_nc))
    doctored = WeakMorphism(algB, algL, "diag", "z11_diag", OMEGA_VARIANT)
    with pytest.raises(TwoCheckError):
        validate_algebra_two_cell(strict, doctored, "z00_diag")


def test_build_talg_identity_collapse_isomorphism(all_bases):
    # criterion 1 core: T-Alg(Id) is isomorphic to the base via the
    # canonical comparison
    for K in all_bases:
        T = ident(K)
        for om in canonical_omegas(K).values():
            talg = build_talg(T, om)
            assert len(talg.algebra_of) == len(K.objects)
            assert len(talg.morphism_of) == len(K.one_cells)
            assert len(talg.cell_of) == len(K.two_cells)
            U = talg.forgetful
            assert len(set(U.object_map.values())) == len(K.objects)
            assert len(set(U.one_map.values())) == len(K.one_cells)
            assert len(set(U.two_map.values())) == len(K.two_cells)


def test_talg_strictness_theorem(sweep_bases, k_iso, k_conj, twist_monad, proj_monad):
    # On a finite base every weak morphism is strict: the unit of any algebra
    # is invertible, so unit coherence forces the structural cell to be the
    # identity.  (See the engineering notes; this is why the weak/pseudo/lax
    # inclusions of Example 2.3 are realized as equalities at desk scale.)
    cases = [(K, monad) for K in sweep_bases + [k_iso, k_conj]
             for monad in enumerate_monads(K)]
    cases += [(twist_monad.base, twist_monad), (proj_monad.base, proj_monad)]
    for K, monad in cases:
        if True:
            for alg in enumerate_algebras(monad):
                i = monad.unit[alg.carrier]
                assert K.vertical_inverse(K.id2(i)) is not None  # 1-cell iso check below
                inv = [h for h in K.homs[(monad.T_obj(alg.carrier), alg.carrier)].objects
                       if K.hcomp1(h, i) == K.id1(alg.carrier)
                       and K.hcomp1(i, h) == K.id1(monad.T_obj(alg.carrier))]
                assert inv, "algebra unit must be invertible"
            talg = build_talg(monad, omega_l(K))
            for mor in talg.morphism_of.values():
                hom = K.homs[K.two_cell_hom[mor.structural]]
                assert hom.is_identity(mor.structural)


def test_build_talg_subset_inclusions(k_conj, twist_monad):
    # criterion 2 shape: the three enumerated 2-categories are literal
    # cell-subset inclusions
    talgs = {name: build_talg(twist_monad, fam)
             for name, fam in canonical_omegas(k_conj).items()}
    keys = {name: set(t.morphism_index) for name, t in talgs.items()}
    assert keys["s"] <= keys["p"] <= keys["l"]
    cells = {name: set(t.cell_index) for name, t in talgs.items()}
    assert cells["s"] <= cells["p"] <= cells["l"]


def test_co_duality_of_talg(k_conj, twist_monad):
    # criterion 3 shape: co(T-Alg_coomega) equals T^co-Alg_omega after the
    # canonical relabeling; checked as a validated bijective comparison.
    functor = co_duality_comparison(twist_monad, omega_p(k_conj))
    assert functor is not None


def co_duality_comparison(monad, omega):
    talg_co = build_talg(monad, omega, CO_OMEGA_VARIANT)
    co_talg = co_dual(talg_co.two_category)
    monad_co = md.co_dual_monad(monad)
    omega_co = co_dual(omega)
    talg2 = build_talg(monad_co, omega_co, OMEGA_VARIANT)
    K2 = talg2.two_category
    object_map = {}
    for oid, alg in talg_co.algebra_of.items():
        object_map[oid] = talg2.algebra_index[alg.key()]
    one_map = {}
    for mid, mor in talg_co.morphism_of.items():
        one_map[mid] = talg2.morphism_index[mor.key()]
    two_map = {}
    for wid, cell in talg_co.cell_of.items():
        # direction swaps under co-dualization
        two_map[wid] = talg2.cell_index[(cell.target.key(), cell.source.key(), cell.two_cell)]
    functor = validate_two_functor("codual-cmp", co_talg, K2, object_map, one_map, two_map)
    assert len(set(two_map.values())) == len(talg2.cell_of)
    assert len(set(one_map.values())) == len(talg2.morphism_of)
    return functor


# ---------------------------------------------------------------------------
# detection


def test_identity_projection_detects_everything(k_conj, twist_monad):
    talg = build_talg(twist_monad, omega_p(k_conj))
    for oid in talg.two_category.objects:
        ident_cell = talg.two_category.id1(oid)
        for fam in canonical_omegas(k_conj).values():
            assert detects_omega_prime(talg, [ident_cell], fam)


def test_empty_family_vacuous_detection_logic(k_conj, twist_monad):
    # Unit test of the predicate: with no projections every composite
    # condition holds, so detection fails as soon as some morphism's
    # structural cell is outside the tested member set.  Finite bases only
    # produce identity structural cells, so exercise the predicate against a
    # synthetic member set that omits them.
    talg = build_talg(twist_monad, omega_p(k_conj))

    class Fake:
        members = frozenset()

    assert not detects_omega_prime(talg, [], Fake())
    assert detects_omega_prime(talg, [], omega_s(k_conj))


def test_omega_bar_is_valid_family(k_conj, twist_monad):
    talg = build_talg(twist_monad, omega_l(k_conj))
    for fam in canonical_omegas(k_conj).values():
        bar = omega_bar(talg, fam)
        assert all(talg.cell_of[w].two_cell in fam.members for w in bar.members)


def test_whiskering_algebra_cells_closure(k_conj, twist_monad):
    # horizontal composition of algebra 2-cells with identity cells of weak
    # morphisms stays an algebra 2-cell (needed for build_talg validity)
    talg = build_talg(twist_monad, omega_p(k_conj))
    K2 = talg.two_category
    for w in K2.two_cells:
        for m in K2.one_cells:
            if K2.one_cell_hom[m][1] == K2.two_cell_hom[w][0]:
                K2.hcomp2(w, K2.id2(m))  # raises KeyError if not closed
            if K2.two_cell_hom[w][1] == K2.one_cell_hom[m][0]:
                K2.hcomp2(K2.id2(m), w)

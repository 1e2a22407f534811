"""2-monads, strict algebras, weak morphisms, algebra 2-cells, T-Alg.

A weak (omega-variant) morphism (f, fbar): (A,a) -> (B,b) has
fbar: b.Tf => f.a lying in the governing cell family, subject to the unit
and multiplication coherence; the co-omega variant reverses fbar.  Algebra
2-cells satisfy gbar . (b . T alpha) = (alpha . a) . fbar, mirrored for
co-omega.  build_talg assembles the finite 2-category of all algebras,
weak morphisms and algebra 2-cells together with its forgetful 2-functor,
and both outputs are run through the full validators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    AlgebraCellAxiom,
    CoherenceMult,
    CoherenceUnit,
    FunctorLaw,
    MonadLaw,
    NaturalityViolation,
    NotInOmega,
    TwoCheckError,
    TypeMismatch,
    raise_first,
)
from .fincat import guard_budget
from .twocat import (
    CellFamily,
    TwoCategory,
    TwoFunctor,
    co_dual,
    compose_two_functors,
    enumerate_two_functors,
    validate_two_category,
    validate_two_functor,
)

OMEGA_VARIANT = "omega"
CO_OMEGA_VARIANT = "coomega"


@dataclass(frozen=True, eq=False)
class TwoMonad:
    base: TwoCategory
    endo: TwoFunctor
    mult: Mapping     # object -> 1-cell T(T A) -> T A
    unit: Mapping     # object -> 1-cell A -> T A

    def T_obj(self, x):
        return self.endo.object_map[x]

    def T_one(self, f):
        return self.endo.one_map[f]

    def T_two(self, alpha):
        return self.endo.two_map[alpha]

    def key(self):
        return (
            tuple(sorted(self.endo.object_map.items())),
            tuple(sorted(self.endo.one_map.items())),
            tuple(sorted(self.endo.two_map.items())),
            tuple(sorted(self.mult.items())),
            tuple(sorted(self.unit.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, TwoMonad):
            return NotImplemented
        return self.base == other.base and self.key() == other.key()

    def __repr__(self):
        return f"TwoMonad(on {self.base.name})"


def validate_monad(K, endo, mult, unit):
    """Validate 2-naturality of mult/unit and the three monad laws."""
    if isinstance(endo, TwoFunctor):
        T = validate_two_functor(endo.name, K, K, endo.object_map, endo.one_map, endo.two_map)
    else:
        raise FunctorLaw("endo must be a TwoFunctor")
    T2 = compose_two_functors(T, T)
    violations = []
    for x in K.objects:
        m = mult.get(x)
        if m is None or K.one_cell_hom.get(m) != (T2.object_map[x], T.object_map[x]):
            violations.append(MonadLaw("mult component misplaced", object=x, component=m))
        i = unit.get(x)
        if i is None or K.one_cell_hom.get(i) != (x, T.object_map[x]):
            violations.append(MonadLaw("unit component misplaced", object=x, component=i))
    raise_first(violations)

    for f in K.one_cells:
        a, b = K.one_cell_hom[f]
        if K.hcomp1(mult[b], T2.one_map[f]) != K.hcomp1(T.one_map[f], mult[a]):
            violations.append(NaturalityViolation("mult not natural on a 1-cell", cell=f))
        if K.hcomp1(unit[b], f) != K.hcomp1(T.one_map[f], unit[a]):
            violations.append(NaturalityViolation("unit not natural on a 1-cell", cell=f))
    raise_first(violations)
    for alpha in K.two_cells:
        a, b = K.two_cell_hom[alpha]
        if K.hcomp2(K.id2(mult[b]), T2.two_map[alpha]) != K.hcomp2(T.two_map[alpha], K.id2(mult[a])):
            violations.append(NaturalityViolation("mult not natural on a 2-cell", cell=alpha))
        if K.hcomp2(K.id2(unit[b]), alpha) != K.hcomp2(T.two_map[alpha], K.id2(unit[a])):
            violations.append(NaturalityViolation("unit not natural on a 2-cell", cell=alpha))
    raise_first(violations)

    for x in K.objects:
        tx = T.object_map[x]
        if K.hcomp1(mult[x], T.one_map[mult[x]]) != K.hcomp1(mult[x], mult[tx]):
            violations.append(MonadLaw("associativity fails", object=x))
        if K.hcomp1(mult[x], unit[tx]) != K.id1(tx):
            violations.append(MonadLaw("right unit fails", object=x))
        if K.hcomp1(mult[x], T.one_map[unit[x]]) != K.id1(tx):
            violations.append(MonadLaw("left unit fails", object=x))
    raise_first(violations)

    return TwoMonad(K, T, dict(mult), dict(unit))


def identity_monad(K):
    from .twocat import identity_two_functor

    return TwoMonad(
        K, identity_two_functor(K),
        {x: K.id1(x) for x in K.objects},
        {x: K.id1(x) for x in K.objects},
    )


def enumerate_monads(K, budget=None):
    """All 2-monads on K, by brute force over endo-2-functors and component
    tables; canonical order; deduplicated by structural equality."""
    results = []
    seen = set()
    for T in enumerate_two_functors(K, K, budget=budget):
        T2 = compose_two_functors(T, T)
        mult_choices = [sorted(K.homs[(T2.object_map[x], T.object_map[x])].objects) for x in K.objects]
        unit_choices = [sorted(K.homs[(x, T.object_map[x])].objects) for x in K.objects]
        if any(not c for c in mult_choices) or any(not c for c in unit_choices):
            continue
        for mult_vals in itertools.product(*mult_choices):
            mult = dict(zip(K.objects, mult_vals))
            for unit_vals in itertools.product(*unit_choices):
                unit = dict(zip(K.objects, unit_vals))
                try:
                    monad = validate_monad(K, T, mult, unit)
                except TwoCheckError:
                    continue
                if monad.key() not in seen:
                    seen.add(monad.key())
                    results.append(monad)
                    guard_budget(len(results), "monad enumeration", budget)
    results.sort(key=lambda m: m.key())
    return results


def monad_preserves_family(monad, omega):
    """T(Omega) contained in Omega."""
    if omega.host != monad.base:
        raise TypeMismatch("family must live on the monad's base")
    return all(monad.endo.two_map[alpha] in omega.members for alpha in omega.members)


@dataclass(frozen=True, eq=False)
class StrictAlgebra:
    monad: TwoMonad
    carrier: str
    structure: str

    def key(self):
        return (self.carrier, self.structure)

    def __eq__(self, other):
        if not isinstance(other, StrictAlgebra):
            return NotImplemented
        return self.monad == other.monad and self.key() == other.key()

    def __repr__(self):
        return f"StrictAlgebra({self.carrier}, {self.structure})"


def validate_algebra(monad, carrier, structure):
    K = monad.base
    ta = monad.T_obj(carrier)
    if K.one_cell_hom.get(structure) != (ta, carrier):
        raise TypeMismatch("structure 1-cell misplaced", carrier=carrier, structure=structure)
    if K.hcomp1(structure, monad.T_one(structure)) != K.hcomp1(structure, monad.mult[carrier]):
        raise MonadLaw("algebra associativity fails", carrier=carrier, structure=structure)
    if K.hcomp1(structure, monad.unit[carrier]) != K.id1(carrier):
        raise MonadLaw("algebra unit fails", carrier=carrier, structure=structure)
    return StrictAlgebra(monad, carrier, structure)


def enumerate_algebras(monad):
    K = monad.base
    results = []
    for carrier in sorted(K.objects):
        for structure in sorted(K.homs[(monad.T_obj(carrier), carrier)].objects):
            try:
                results.append(validate_algebra(monad, carrier, structure))
            except TwoCheckError:
                continue
    return results


@dataclass(frozen=True, eq=False)
class WeakMorphism:
    source: StrictAlgebra
    target: StrictAlgebra
    one_cell: str
    structural: str
    variant: str

    def key(self):
        return (self.source.key(), self.target.key(), self.one_cell, self.structural)

    def __eq__(self, other):
        if not isinstance(other, WeakMorphism):
            return NotImplemented
        return self.key() == other.key() and self.variant == other.variant

    def __repr__(self):
        return f"WeakMorphism({self.one_cell}, {self.structural})"


def _structural_endpoints_morphism(K, monad, src, tgt, f, variant):
    left = K.hcomp1(tgt.structure, monad.T_one(f))   # b . Tf
    right = K.hcomp1(f, src.structure)               # f . a
    if variant == OMEGA_VARIANT:
        return left, right
    return right, left


def validate_weak_morphism(monad, src, tgt, f, fbar, omega, variant=OMEGA_VARIANT):
    """Typing, Omega-membership, then unit and multiplication coherence."""
    K = monad.base
    if variant not in (OMEGA_VARIANT, CO_OMEGA_VARIANT):
        raise TypeMismatch(f"unknown variant {variant!r}")
    if omega.host != K:
        raise TypeMismatch("omega must live on the base")
    if K.one_cell_hom.get(f) != (src.carrier, tgt.carrier):
        raise TypeMismatch("underlying 1-cell misplaced", cell=f)
    want = _structural_endpoints_morphism(K, monad, src, tgt, f, variant)
    if fbar not in K.two_cell_hom or (K.src2(fbar), K.tgt2(fbar)) != want:
        raise TypeMismatch("structural 2-cell misplaced", cell=fbar, expected=want)
    if fbar not in omega.members:
        raise NotInOmega("structural 2-cell outside Omega", cell=fbar)

    # unit coherence: fbar whiskered by i_A is the identity of f
    if K.hcomp2(fbar, K.id2(monad.unit[src.carrier])) != K.id2(f):
        raise CoherenceUnit("unit coherence fails", cell=fbar, morphism=f)

    # multiplication coherence
    lhs = K.hcomp2(fbar, K.id2(monad.mult[src.carrier]))
    t_fbar = monad.T_two(fbar)
    if variant == OMEGA_VARIANT:
        rhs = K.vcomp(
            K.hcomp2(fbar, K.id2(monad.T_one(src.structure))),
            K.hcomp2(K.id2(tgt.structure), t_fbar),
        )
    else:
        rhs = K.vcomp(
            K.hcomp2(K.id2(tgt.structure), t_fbar),
            K.hcomp2(fbar, K.id2(monad.T_one(src.structure))),
        )
    if lhs != rhs:
        raise CoherenceMult("multiplication coherence fails", cell=fbar, morphism=f)
    return WeakMorphism(src, tgt, f, fbar, variant)


def enumerate_weak_morphisms(monad, src, tgt, omega, variant=OMEGA_VARIANT):
    K = monad.base
    results = []
    for f in sorted(K.homs[(src.carrier, tgt.carrier)].objects):
        want = _structural_endpoints_morphism(K, monad, src, tgt, f, variant)
        for fbar in sorted(K.two_cells_between(*want)):
            try:
                results.append(validate_weak_morphism(monad, src, tgt, f, fbar, omega, variant))
            except TwoCheckError:
                continue
    return results


def identity_weak_morphism(algebra, variant=OMEGA_VARIANT):
    K = algebra.monad.base
    return WeakMorphism(
        algebra, algebra, K.id1(algebra.carrier), K.id2(algebra.structure), variant
    )


def compose_weak_morphisms(second, first):
    """(g,gbar).(f,fbar) with the standard pasted structural cell."""
    if first.target != second.source or first.variant != second.variant:
        raise TypeMismatch("weak morphisms not composable")
    monad = first.source.monad
    K = monad.base
    f, g = first.one_cell, second.one_cell
    gf = K.hcomp1(g, f)
    if first.variant == OMEGA_VARIANT:
        structural = K.vcomp(
            K.hcomp2(K.id2(g), first.structural),
            K.hcomp2(second.structural, K.id2(monad.T_one(f))),
        )
    else:
        structural = K.vcomp(
            K.hcomp2(second.structural, K.id2(monad.T_one(f))),
            K.hcomp2(K.id2(g), first.structural),
        )
    return WeakMorphism(first.source, second.target, gf, structural, first.variant)


@dataclass(frozen=True, eq=False)
class AlgebraTwoCell:
    source: WeakMorphism
    target: WeakMorphism
    two_cell: str

    def key(self):
        return (self.source.key(), self.target.key(), self.two_cell)

    def __eq__(self, other):
        if not isinstance(other, AlgebraTwoCell):
            return NotImplemented
        return self.key() == other.key()


def algebra_cell_equation_holds(monad, mor_f, mor_g, alpha, variant=OMEGA_VARIANT):
    """The eq-alg2cell pasting equality, mirrored for the co-omega variant."""
    K = monad.base
    a = mor_f.source.structure
    b = mor_f.target.structure
    t_alpha = monad.T_two(alpha)
    if variant == OMEGA_VARIANT:
        lhs = K.vcomp(mor_g.structural, K.hcomp2(K.id2(b), t_alpha))
        rhs = K.vcomp(K.hcomp2(alpha, K.id2(a)), mor_f.structural)
    else:
        lhs = K.vcomp(K.hcomp2(K.id2(b), t_alpha), mor_f.structural)
        rhs = K.vcomp(mor_g.structural, K.hcomp2(alpha, K.id2(a)))
    return lhs == rhs


def validate_algebra_two_cell(mor_f, mor_g, alpha):
    if mor_f.source != mor_g.source or mor_f.target != mor_g.target:
        raise TypeMismatch("weak morphisms not parallel")
    monad = mor_f.source.monad
    K = monad.base
    if alpha not in K.two_cell_hom or (K.src2(alpha), K.tgt2(alpha)) != (mor_f.one_cell, mor_g.one_cell):
        raise TypeMismatch("underlying 2-cell misplaced", cell=alpha)
    if not algebra_cell_equation_holds(monad, mor_f, mor_g, alpha, mor_f.variant):
        raise AlgebraCellAxiom("algebra 2-cell equation fails", cell=alpha)
    return AlgebraTwoCell(mor_f, mor_g, alpha)


def enumerate_algebra_two_cells(mor_f, mor_g):
    K = mor_f.source.monad.base
    results = []
    for alpha in sorted(K.two_cells_between(mor_f.one_cell, mor_g.one_cell)):
        try:
            results.append(validate_algebra_two_cell(mor_f, mor_g, alpha))
        except TwoCheckError:
            continue
    return results


# ---------------------------------------------------------------------------
# T-Alg


@dataclass(frozen=True)
class TAlg:
    monad: TwoMonad
    omega: CellFamily
    variant: str
    two_category: TwoCategory
    forgetful: TwoFunctor
    algebra_of: Mapping          # object id -> StrictAlgebra
    morphism_of: Mapping         # 1-cell id -> WeakMorphism
    cell_of: Mapping             # 2-cell id -> AlgebraTwoCell
    algebra_index: Mapping       # algebra key -> object id
    morphism_index: Mapping      # morphism key -> 1-cell id
    cell_index: Mapping          # cell key -> 2-cell id

    def object_of_algebra(self, algebra):
        return self.algebra_index[algebra.key()]

    def one_cell_of(self, morphism):
        return self.morphism_index[morphism.key()]

    def two_cell_of(self, cell):
        return self.cell_index[cell.key()]


def build_talg(monad, omega, variant=OMEGA_VARIANT, budget=None, name=None):
    """The 2-category T-Alg with its forgetful 2-functor, fully validated."""
    K = monad.base
    algebras = enumerate_algebras(monad)
    algebras.sort(key=lambda a: a.key())
    algebra_of, algebra_index = {}, {}
    for i, alg in enumerate(algebras):
        oid = f"alg{i}"
        algebra_of[oid] = alg
        algebra_index[alg.key()] = oid

    morphism_of, morphism_index = {}, {}
    for src_id in sorted(algebra_of):
        for tgt_id in sorted(algebra_of):
            for mor in enumerate_weak_morphisms(monad, algebra_of[src_id], algebra_of[tgt_id], omega, variant):
                mid = f"m{len(morphism_of)}"
                morphism_of[mid] = mor
                morphism_index[mor.key()] = mid
                guard_budget(len(morphism_of), "T-Alg 1-cells", budget)

    cell_of, cell_index = {}, {}
    by_pair = {}
    for mid in sorted(morphism_of, key=lambda m: morphism_of[m].key()):
        mor = morphism_of[mid]
        by_pair.setdefault((algebra_index[mor.source.key()], algebra_index[mor.target.key()]), []).append(mid)
    for pair, mids in sorted(by_pair.items()):
        for m1 in mids:
            for m2 in mids:
                for cell in enumerate_algebra_two_cells(morphism_of[m1], morphism_of[m2]):
                    wid = f"w{len(cell_of)}"
                    cell_of[wid] = cell
                    cell_index[cell.key()] = wid
                    guard_budget(len(cell_of), "T-Alg 2-cells", budget)

    homs = {}
    for a_id in algebra_of:
        for b_id in algebra_of:
            mids = by_pair.get((a_id, b_id), [])
            wids = [w for w, c in cell_of.items()
                    if morphism_index[c.source.key()] in mids]
            source = {w: morphism_index[cell_of[w].source.key()] for w in wids}
            target = {w: morphism_index[cell_of[w].target.key()] for w in wids}
            identity = {}
            for m in mids:
                mor = morphism_of[m]
                identity[m] = cell_index[(mor.key(), mor.key(), K.id2(mor.one_cell))]
            comp = {}
            for w2 in wids:
                for w1 in wids:
                    if target[w1] != source[w2]:
                        continue
                    alpha = K.vcomp(cell_of[w2].two_cell, cell_of[w1].two_cell)
                    comp[(w2, w1)] = cell_index[
                        (cell_of[w1].source.key(), cell_of[w2].target.key(), alpha)
                    ]
            homs[(a_id, b_id)] = {
                "name": f"TAlg.hom({a_id},{b_id})",
                "objects": mids,
                "morphisms": wids,
                "source": source,
                "target": target,
                "identity": identity,
                "composition": comp,
            }

    identity_1 = {
        a_id: morphism_index[identity_weak_morphism(algebra_of[a_id], variant).key()]
        for a_id in algebra_of
    }
    hcomp1 = {}
    for m2, mor2 in morphism_of.items():
        for m1, mor1 in morphism_of.items():
            if mor1.target != mor2.source:
                continue
            hcomp1[(m2, m1)] = morphism_index[compose_weak_morphisms(mor2, mor1).key()]
    hcomp2 = {}
    for w2, c2 in cell_of.items():
        for w1, c1 in cell_of.items():
            if c1.source.target != c2.source.source:
                continue
            alpha = K.hcomp2(c2.two_cell, c1.two_cell)
            src = compose_weak_morphisms(c2.source, c1.source)
            tgt = compose_weak_morphisms(c2.target, c1.target)
            hcomp2[(w2, w1)] = cell_index[(src.key(), tgt.key(), alpha)]

    talg_name = name or f"{K.name}-TAlg[{variant}]"
    two_cat = validate_two_category(talg_name, sorted(algebra_of), homs, identity_1,
                                    hcomp1, hcomp2, budget=budget)
    forgetful = validate_two_functor(
        f"U<{talg_name}>", two_cat, K,
        {a_id: algebra_of[a_id].carrier for a_id in algebra_of},
        {m: morphism_of[m].one_cell for m in morphism_of},
        {w: cell_of[w].two_cell for w in cell_of},
    )
    return TAlg(monad, omega, variant, two_cat, forgetful, algebra_of, morphism_of, cell_of,
                algebra_index, morphism_index, cell_index)


def omega_bar(talg, omega):
    """Algebra 2-cells whose underlying 2-cell lies in omega, as a family on
    the T-Alg 2-category."""
    from .twocat import validate_cell_family

    members = [w for w, cell in talg.cell_of.items() if cell.two_cell in omega.members]
    return validate_cell_family(talg.two_category, members)


def morphism_is_in_family(talg, one_cell_id, omega_prime):
    """Whether a T-Alg 1-cell is an omega'-morphism (structural cell in the family)."""
    return talg.morphism_of[one_cell_id].structural in omega_prime.members


def detects_omega_prime(talg, projections, omega_prime):
    """Joint detection: every z with all p_i . z omega'-morphisms is one."""
    K = talg.two_category
    if not projections:
        vertices = set()
    else:
        vertices = {K.one_cell_hom[p][0] for p in projections}
        if len(vertices) > 1:
            raise TypeMismatch("projections must share their source")
    for z in K.one_cells:
        if projections and K.tgt1(z) not in vertices:
            continue
        composites_ok = all(
            morphism_is_in_family(talg, K.hcomp1(p, z), omega_prime) for p in projections
        )
        if composites_ok and not morphism_is_in_family(talg, z, omega_prime):
            return False
    return True


def co_dual_monad(monad):
    Kco = co_dual(monad.base)
    Tco = co_dual(monad.endo)
    return TwoMonad(Kco, Tco, dict(monad.mult), dict(monad.unit))


co_dual.register(TwoMonad)(co_dual_monad)


def reversal_isomorphism(talg_omega, talg_coomega):
    """Remark 2.2: when Omega has only invertible cells, inverting the
    structural cell is an isomorphism T-Alg_coomega = T-Alg_omega.  Returns
    the comparison TwoFunctor (validated), raising if it is not bijective."""
    K = talg_omega.monad.base
    object_map = {}
    for oid, alg in talg_omega.algebra_of.items():
        object_map[oid] = talg_coomega.algebra_index[alg.key()]
    one_map = {}
    for mid, mor in talg_omega.morphism_of.items():
        inv = K.vertical_inverse(mor.structural)
        if inv is None:
            raise TwoCheckError("structural cell not invertible", cell=mor.structural)
        one_map[mid] = talg_coomega.morphism_index[
            (mor.source.key(), mor.target.key(), mor.one_cell, inv)
        ]
    two_map = {}
    for wid, cell in talg_omega.cell_of.items():
        src = talg_omega.morphism_of[talg_omega.morphism_index[cell.source.key()]]
        tgt = talg_omega.morphism_of[talg_omega.morphism_index[cell.target.key()]]
        two_map[wid] = talg_coomega.cell_index[(
            (src.source.key(), src.target.key(), src.one_cell, K.vertical_inverse(src.structural)),
            (tgt.source.key(), tgt.target.key(), tgt.one_cell, K.vertical_inverse(tgt.structural)),
            cell.two_cell,
        )]
    functor = validate_two_functor(
        "invert", talg_omega.two_category, talg_coomega.two_category, object_map, one_map, two_map
    )
    if (len(set(object_map.values())) != len(talg_coomega.algebra_of)
            or len(set(one_map.values())) != len(talg_coomega.morphism_of)
            or len(set(two_map.values())) != len(talg_coomega.cell_of)):
        raise TwoCheckError("reversal functor is not bijective")
    return functor

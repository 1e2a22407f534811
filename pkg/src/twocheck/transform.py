"""Lax and oplax natural transformations, modifications, hom 2-categories.

The paper-facing notions: a transformation between 2-functors F,G: A -> B has
1-cell components t_A: FA -> GA and structural 2-cells

    lax:    t_f : Gf . t_A  =>  t_B . Ff
    oplax:  t_f : t_B . Ff  =>  Gf . t_A

subject to the three standard axioms (unit, composition, 2-cell naturality),
mirrored for oplax.  A transformation is sigma-omega when t_f lies in Omega
for every f in Sigma.  Modifications are families r_A: t_A => t'_A subject to
the usual square, again mirrored for oplax.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    CompositionAxiom,
    HostMismatch,
    ModificationAxiom,
    TwoCellNaturality,
    TwoCheckError,
    TypeMismatch,
    UnitAxiom,
    raise_first,
)
from .fincat import FinCategory, guard_budget, validate_category
from .twocat import (
    ArrowFamily,
    CellFamily,
    TwoCategory,
    TwoFunctor,
    constant_two_functor,
    validate_two_category,
)

LAX = "lax"
OPLAX = "oplax"


@dataclass(frozen=True, eq=False)
class LaxTransformation:
    source: TwoFunctor
    target: TwoFunctor
    component_1: Mapping   # object A -> 1-cell t_A
    component_2: Mapping   # 1-cell f -> 2-cell t_f
    orientation: str

    def at(self, obj):
        return self.component_1[obj]

    def at_one(self, f):
        return self.component_2[f]

    def key(self):
        return (
            tuple(sorted(self.component_1.items())),
            tuple(sorted(self.component_2.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, LaxTransformation):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.component_1) == dict(other.component_1)
            and dict(self.component_2) == dict(other.component_2)
            and self.orientation == other.orientation
        )

    def __repr__(self):
        return f"LaxTransformation({self.source.name} => {self.target.name}, {self.orientation})"


def _structural_endpoints(K, F, G, t1, f, orientation):
    """(source, target) 1-cells required of t_f."""
    a, b = F.source.one_cell_hom[f]
    left = K.hcomp1(G.one_map[f], t1[a])   # Gf . t_A
    right = K.hcomp1(t1[b], F.one_map[f])  # t_B . Ff
    if orientation == LAX:
        return left, right
    return right, left


def validate_lax_transformation(F, G, component_1, component_2, orientation=LAX):
    """Validate the three coherence axioms for a (op)lax transformation."""
    if orientation not in (LAX, OPLAX):
        raise TypeMismatch(f"unknown orientation {orientation!r}")
    if F.source != G.source or F.target != G.target:
        raise TypeMismatch("2-functors are not parallel", F=F.name, G=G.name)
    A, K = F.source, F.target
    violations = []
    for obj in A.objects:
        t = component_1.get(obj)
        if t is None or K.one_cell_hom.get(t) != (F.object_map[obj], G.object_map[obj]):
            violations.append(TypeMismatch("component 1-cell has wrong endpoints", object=obj, component=t))
    raise_first(violations)
    for f in A.one_cells:
        tf = component_2.get(f)
        want = _structural_endpoints(K, F, G, component_1, f, orientation)
        if tf is None or tf not in K.two_cell_hom or (K.src2(tf), K.tgt2(tf)) != want:
            violations.append(TypeMismatch("structural 2-cell has wrong endpoints", one_cell=f, component=tf))
    raise_first(violations)

    for obj in A.objects:
        if component_2[A.id1(obj)] != K.id2(component_1[obj]):
            violations.append(UnitAxiom("unit axiom fails", object=obj,
                                        component=component_2[A.id1(obj)]))
    raise_first(violations)

    for g in A.one_cells:
        for f in A.one_cells:
            if A.tgt1(f) != A.src1(g):
                continue
            gf = A.hcomp1(g, f)
            tf, tg = component_2[f], component_2[g]
            if orientation == LAX:
                expected = K.vcomp(
                    K.hcomp2(tg, K.id2(F.one_map[f])),
                    K.hcomp2(K.id2(G.one_map[g]), tf),
                )
            else:
                expected = K.vcomp(
                    K.hcomp2(K.id2(G.one_map[g]), tf),
                    K.hcomp2(tg, K.id2(F.one_map[f])),
                )
            if component_2[gf] != expected:
                violations.append(CompositionAxiom("composition axiom fails", g=g, f=f))
    raise_first(violations)

    for alpha in A.two_cells:
        f, g = A.src2(alpha), A.tgt2(alpha)
        a = A.one_cell_hom[f][0]
        b = A.one_cell_hom[f][1]
        tf, tg = component_2[f], component_2[g]
        if orientation == LAX:
            lhs = K.vcomp(tg, K.hcomp2(G.two_map[alpha], K.id2(component_1[a])))
            rhs = K.vcomp(K.hcomp2(K.id2(component_1[b]), F.two_map[alpha]), tf)
        else:
            lhs = K.vcomp(K.hcomp2(G.two_map[alpha], K.id2(component_1[a])), tf)
            rhs = K.vcomp(tg, K.hcomp2(K.id2(component_1[b]), F.two_map[alpha]))
        if lhs != rhs:
            violations.append(TwoCellNaturality("2-cell naturality fails", two_cell=alpha))
    raise_first(violations)

    return LaxTransformation(F, G, dict(component_1), dict(component_2), orientation)


def identity_transformation(F, orientation=LAX):
    K = F.target
    c1 = {obj: K.id1(F.object_map[obj]) for obj in F.source.objects}
    c2 = {f: K.id2(F.one_map[f]) for f in F.source.one_cells}
    return LaxTransformation(F, F, c1, c2, orientation)


def compose_transformations(second, first):
    """1-cell composition in the hom 2-category: first t: F=>G, then s: G=>H."""
    if first.target != second.source or first.orientation != second.orientation:
        raise TypeMismatch("transformations not composable")
    F, H = first.source, second.target
    K = F.target
    orientation = first.orientation
    c1 = {obj: K.hcomp1(second.component_1[obj], first.component_1[obj]) for obj in F.source.objects}
    c2 = {}
    G = first.target
    for f in F.source.one_cells:
        a, b = F.source.one_cell_hom[f]
        tf, sf = first.component_2[f], second.component_2[f]
        if orientation == LAX:
            c2[f] = K.vcomp(
                K.hcomp2(K.id2(second.component_1[b]), tf),
                K.hcomp2(sf, K.id2(first.component_1[a])),
            )
        else:
            c2[f] = K.vcomp(
                K.hcomp2(sf, K.id2(first.component_1[a])),
                K.hcomp2(K.id2(second.component_1[b]), tf),
            )
    return LaxTransformation(F, H, c1, c2, orientation)


def is_sigma_omega(trans, sigma, omega):
    """True iff t_f lies in omega for every f in sigma."""
    if sigma.host != trans.source.source:
        raise HostMismatch("sigma must live on the shape 2-category")
    if omega.host != trans.source.target:
        raise HostMismatch("omega must live on the target 2-category")
    return all(trans.component_2[f] in omega.members for f in sigma.members)


@dataclass(frozen=True, eq=False)
class Modification:
    source: LaxTransformation
    target: LaxTransformation
    component: Mapping   # object -> 2-cell r_A

    def at(self, obj):
        return self.component[obj]

    def key(self):
        return tuple(sorted(self.component.items()))

    def __eq__(self, other):
        if not isinstance(other, Modification):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.component) == dict(other.component)
        )


def validate_modification(theta, theta_prime, component):
    if theta.source != theta_prime.source or theta.target != theta_prime.target:
        raise TypeMismatch("transformations not parallel")
    if theta.orientation != theta_prime.orientation:
        raise TypeMismatch("orientations differ")
    F, G = theta.source, theta.target
    A, K = F.source, F.target
    violations = []
    for obj in A.objects:
        r = component.get(obj)
        if r is None or r not in K.two_cell_hom or (K.src2(r), K.tgt2(r)) != (
            theta.component_1[obj], theta_prime.component_1[obj]
        ):
            violations.append(TypeMismatch("modification component has wrong endpoints", object=obj))
    raise_first(violations)
    for f in A.one_cells:
        a, b = A.one_cell_hom[f]
        if theta.orientation == LAX:
            lhs = K.vcomp(theta_prime.component_2[f], K.hcomp2(K.id2(G.one_map[f]), component[a]))
            rhs = K.vcomp(K.hcomp2(component[b], K.id2(F.one_map[f])), theta.component_2[f])
        else:
            lhs = K.vcomp(K.hcomp2(K.id2(G.one_map[f]), component[a]), theta.component_2[f])
            rhs = K.vcomp(theta_prime.component_2[f], K.hcomp2(component[b], K.id2(F.one_map[f])))
        if lhs != rhs:
            violations.append(ModificationAxiom("modification axiom fails", one_cell=f))
    raise_first(violations)
    return Modification(theta, theta_prime, dict(component))


def identity_modification(theta):
    K = theta.source.target
    return Modification(theta, theta, {obj: K.id2(t) for obj, t in theta.component_1.items()})


def vcomp_modifications(second, first):
    K = first.source.source.target
    return Modification(
        first.source,
        second.target,
        {obj: K.vcomp(second.component[obj], first.component[obj]) for obj in first.component},
    )


def hcomp_modifications(second, first):
    """Horizontal composite: first r: t=>t' (F=>G), then s: u=>u' (G=>H)."""
    K = first.source.source.target
    return Modification(
        compose_transformations(second.source, first.source),
        compose_transformations(second.target, first.target),
        {obj: K.hcomp2(second.component[obj], first.component[obj]) for obj in first.component},
    )


def is_omega_modification(rho, omega_prime):
    if omega_prime.host != rho.source.source.target:
        raise HostMismatch("omega' must live on the target 2-category")
    return all(r in omega_prime.members for r in rho.component.values())


def enumerate_lax_transformations(F, G, orientation=LAX, budget=None):
    """All (op)lax transformations F => G, canonical order."""
    A, K = F.source, F.target
    results = []
    comp_choices = []
    for obj in A.objects:
        cands = sorted(K.homs[(F.object_map[obj], G.object_map[obj])].objects)
        if not cands:
            return []
        comp_choices.append(cands)
    nonid1 = [f for f in A.one_cells if not _shape_identity(A, f)]
    for assignment in itertools.product(*comp_choices):
        c1 = dict(zip(A.objects, assignment))
        cell_choices = []
        ok = True
        for f in nonid1:
            want_src, want_tgt = _structural_endpoints(K, F, G, c1, f, orientation)
            cands = sorted(K.two_cells_between(want_src, want_tgt))
            if not cands:
                ok = False
                break
            cell_choices.append(cands)
        if not ok:
            continue
        for cells in itertools.product(*cell_choices):
            c2 = dict(zip(nonid1, cells))
            for obj in A.objects:
                c2[A.id1(obj)] = K.id2(c1[obj])
            try:
                trans = validate_lax_transformation(F, G, c1, c2, orientation)
            except TwoCheckError:
                continue
            results.append(trans)
            guard_budget(len(results), "transformation enumeration", budget)
    return results


def _shape_identity(A, f):
    a, b = A.one_cell_hom[f]
    return a == b and f == A.id1(a)


def enumerate_modifications(theta, theta_prime):
    A, K = theta.source.source, theta.source.target
    choices = []
    for obj in A.objects:
        cands = sorted(K.two_cells_between(theta.component_1[obj], theta_prime.component_1[obj]))
        if not cands:
            return []
        choices.append(cands)
    results = []
    for assignment in itertools.product(*choices):
        component = dict(zip(A.objects, assignment))
        try:
            results.append(validate_modification(theta, theta_prime, component))
        except TwoCheckError:
            continue
    return results


@dataclass(frozen=True)
class HomTwoCategory:
    two_category: TwoCategory
    functor_of: Mapping
    transformation_of: Mapping
    modification_of: Mapping


def hom_sigma_omega(A, B, sigma, omega, omega_prime, functors, orientation=LAX, budget=None):
    """The 2-category of listed 2-functors, sigma-omega transformations and
    Omega'-modifications, with full composition tables."""
    if sigma.host != A or omega.host != B:
        raise HostMismatch("families on the wrong hosts")
    if omega_prime is not None and omega_prime.host != B:
        raise HostMismatch("omega' on the wrong host")
    functor_of = {}
    for i, F in enumerate(functors):
        functor_of[f"F{i}"] = F

    trans_of = {}
    trans_id_by_key = {}
    homs = {}
    mod_of = {}
    for fid in sorted(functor_of):
        for gid in sorted(functor_of):
            cells = []
            for t in enumerate_lax_transformations(functor_of[fid], functor_of[gid], orientation, budget):
                if is_sigma_omega(t, sigma, omega):
                    tid = f"t{len(trans_of)}"
                    trans_of[tid] = t
                    trans_id_by_key[(fid, gid, t.key())] = tid
                    cells.append(tid)
            homs[(fid, gid)] = cells

    hom_cats = {}
    identity_1 = {}
    mod_src, mod_tgt = {}, {}
    mod_id_by_key = {}
    for (fid, gid), cells in homs.items():
        morphisms = []
        vsrc, vtgt, vid = {}, {}, {}
        for t1 in cells:
            for t2 in cells:
                for rho in enumerate_modifications(trans_of[t1], trans_of[t2]):
                    if omega_prime is not None and not is_omega_modification(rho, omega_prime):
                        continue
                    mid = f"m{len(mod_of)}"
                    mod_of[mid] = rho
                    morphisms.append(mid)
                    guard_budget(len(mod_of), "hom 2-category", budget)
                    vsrc[mid], vtgt[mid] = t1, t2
                    mod_id_by_key[(t1, t2, rho.key())] = mid
                    if t1 == t2 and all(
                        B.homs[B.two_cell_hom[c]].is_identity(c) for c in rho.component.values()
                    ):
                        vid[t1] = mid
        composition = {}
        for m2 in morphisms:
            for m1 in morphisms:
                if vtgt[m1] != vsrc[m2]:
                    continue
                comp = vcomp_modifications(mod_of[m2], mod_of[m1])
                composition[(m2, m1)] = mod_id_by_key[(vsrc[m1], vtgt[m2], comp.key())]
        hom_cats[(fid, gid)] = validate_category(
            f"Hom({fid},{gid})", cells, morphisms, vsrc, vtgt, vid, composition, budget=budget
        )
        if fid == gid:
            ident = identity_transformation(functor_of[fid], orientation)
            identity_1[fid] = trans_id_by_key[(fid, fid, ident.key())]

    hcomp1 = {}
    hcomp2 = {}
    for (fid, gid) in homs:
        for (gid2, hid) in homs:
            if gid2 != gid:
                continue
            for t2 in homs[(gid, hid)]:
                for t1 in homs[(fid, gid)]:
                    comp = compose_transformations(trans_of[t2], trans_of[t1])
                    hcomp1[(t2, t1)] = trans_id_by_key[(fid, hid, comp.key())]
            for m2 in hom_cats[(gid, hid)].morphisms:
                for m1 in hom_cats[(fid, gid)].morphisms:
                    comp = hcomp_modifications(mod_of[m2], mod_of[m1])
                    src = hcomp1[(hom_cats[(gid, hid)].source[m2], hom_cats[(fid, gid)].source[m1])]
                    tgt = hcomp1[(hom_cats[(gid, hid)].target[m2], hom_cats[(fid, gid)].target[m1])]
                    hcomp2[(m2, m1)] = mod_id_by_key[(src, tgt, comp.key())]

    two_cat = validate_two_category(
        f"Hom_so({A.name},{B.name})", sorted(functor_of), hom_cats, identity_1, hcomp1, hcomp2, budget=budget
    )
    return HomTwoCategory(two_cat, functor_of, trans_of, mod_of)

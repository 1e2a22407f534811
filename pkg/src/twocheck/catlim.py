"""Constructive sigma-omega-limits of Cat_fin-valued diagrams.

There is no finite family of 2-cells of Cat to pass around, so the family is
a predicate tag: "s" admits identities, "p" invertible morphisms, "l" all.
The limit is built as the category of sigma-omega transformations from the
weight to the diagram (cones at a formal vertex) with modifications as
morphisms; verification is probe-based: pre-composition is checked to be an
isomorphism of categories against every probe in a configurable list, and
the resulting certificate is labelled probe-verified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import fincat
from .catvalued import CatDiagram, validate_cat_diagram
from .errors import TwoCheckError
from .fincat import (
    FinCategory,
    FinFunctor,
    NatTransformation,
    functor_category,
    guard_budget,
    is_isomorphism_of_categories,
    validate_category,
    validate_functor,
)

TAGS = ("s", "p", "l")


def is_invertible_morphism(cat, m):
    x, y = cat.source[m], cat.target[m]
    for n in cat.morphisms:
        if cat.source[n] == y and cat.target[n] == x:
            if cat.compose(n, m) == cat.identity[x] and cat.compose(m, n) == cat.identity[y]:
                return True
    return False


def _tag_allows(cat, m, tag):
    if tag == "l":
        return True
    if tag == "p":
        return is_invertible_morphism(cat, m)
    if tag == "s":
        return cat.is_identity(m)
    raise TwoCheckError(f"unknown omega tag {tag!r}")


@dataclass(frozen=True, eq=False)
class CatCone:
    """A sigma-omega transformation W => F at a formal vertex."""

    t: dict            # A -> FinFunctor WA -> FA
    cells: dict        # (f, x) -> morphism of F(target)

    def key(self):
        ts = ";".join(
            f"{A}:{sorted(self.t[A].object_map.items())}|{sorted(self.t[A].morphism_map.items())}"
            for A in sorted(self.t)
        )
        cs = ";".join(f"{f}.{x}={m}" for (f, x), m in sorted(self.cells.items()))
        return f"catcone[{ts}||{cs}]"


@dataclass(frozen=True, eq=False)
class CatConeMorphism:
    rho: dict          # A -> NatTransformation t_A => t'_A

    def key(self):
        return ";".join(f"{A}:{sorted(self.rho[A].component.items())}" for A in sorted(self.rho))


@dataclass(frozen=True)
class CatConesCategory:
    category: FinCategory
    cones: dict
    arrows: dict
    cone_index: dict
    arrow_index: dict


def sigma_omega_transformations(W, F, sigma_members, tag, name="L", budget=None):
    """The category of sigma-omega transformations W => F and modifications."""
    shape = W.shape
    if shape != F.shape:
        raise TwoCheckError("weight and diagram must share their shape")

    per_object = []
    for A in sorted(shape.objects):
        funs = fincat.enumerate_functors(W.ob[A], F.ob[A], budget=budget)
        if not funs:
            per_object.append((A, []))
            break
        per_object.append((A, funs))

    nonid1 = [f for f in shape.one_cells if not _shape_identity(shape, f)]
    cones = []
    for combo in itertools.product(*(funs for _, funs in per_object)):
        t = {A: fun for (A, _), fun in zip(per_object, combo)}
        slots = []
        ok = True
        for f in nonid1:
            A, B = shape.one_cell_hom[f]
            FB = F.ob[B]
            Ff, Wf = F.arrow[f], W.arrow[f]
            for x in W.ob[A].objects:
                src = Ff.object_map[t[A].object_map[x]]
                tgt = t[B].object_map[Wf.object_map[x]]
                cands = sorted(m for m in FB.morphisms
                               if FB.source[m] == src and FB.target[m] == tgt)
                if f in sigma_members:
                    cands = [m for m in cands if _tag_allows(FB, m, tag)]
                if not cands:
                    ok = False
                    break
                slots.append(((f, x), cands))
            if not ok:
                break
        if not ok:
            continue
        for assignment in itertools.product(*(c for _, c in slots)):
            cells = {slot: val for (slot, _), val in zip(slots, assignment)}
            for A in shape.objects:
                for x in W.ob[A].objects:
                    cells[(shape.id1(A), x)] = F.ob[A].identity[t[A].object_map[x]]
            if _cat_cone_axioms(W, F, t, cells):
                cones.append(CatCone(dict(t), cells))
                guard_budget(len(cones), "Cat cone enumeration", budget)

    cones.sort(key=lambda c: c.key())
    cone_of, cone_index = {}, {}
    for i, cone in enumerate(cones):
        cone_of[f"c{i}"] = cone
        cone_index[cone.key()] = f"c{i}"

    arrows, arrow_index = {}, {}
    src, tgt, identity = {}, {}, {}
    for c1 in sorted(cone_of):
        for c2 in sorted(cone_of):
            for mor in _cat_cone_morphisms(W, F, cone_of[c1], cone_of[c2]):
                mid = f"m{len(arrows)}"
                arrows[mid] = mor
                src[mid], tgt[mid] = c1, c2
                arrow_index[(c1, c2, mor.key())] = mid
                guard_budget(len(arrows), "Cat cone morphisms", budget)
                if c1 == c2 and all(
                    F.ob[A].is_identity(v)
                    for A, nat in mor.rho.items() for v in nat.component.values()
                ):
                    identity[c1] = mid
    composition = {}
    for m2 in arrows:
        for m1 in arrows:
            if tgt[m1] != src[m2]:
                continue
            comp = CatConeMorphism({
                A: fincat.vcomp_nats(arrows[m2].rho[A], arrows[m1].rho[A]) for A in arrows[m1].rho
            })
            composition[(m2, m1)] = arrow_index[(src[m1], tgt[m2], comp.key())]
    cat = validate_category(name, sorted(cone_of), sorted(arrows), src, tgt, identity,
                            composition, budget=budget)
    return CatConesCategory(cat, cone_of, arrows, cone_index, arrow_index)


def _shape_identity(shape, f):
    a, b = shape.one_cell_hom[f]
    return a == b and f == shape.id1(a)


def _cat_cone_axioms(W, F, t, cells):
    shape = W.shape
    # naturality in x
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        FB, Ff, Wf = F.ob[B], F.arrow[f], W.arrow[f]
        WA = W.ob[A]
        for phi in WA.morphisms:
            x, y = WA.source[phi], WA.target[phi]
            lhs = FB.compose(t[B].morphism_map[Wf.morphism_map[phi]], cells[(f, x)])
            rhs = FB.compose(cells[(f, y)], Ff.morphism_map[t[A].morphism_map[phi]])
            if lhs != rhs:
                return False
    # composition axiom
    for g in shape.one_cells:
        for f in shape.one_cells:
            if shape.tgt1(f) != shape.src1(g):
                continue
            gf = shape.hcomp1(g, f)
            A = shape.one_cell_hom[f][0]
            C = shape.one_cell_hom[g][1]
            FC, Fg = F.ob[C], F.arrow[g]
            Wf = W.arrow[f]
            for x in W.ob[A].objects:
                expected = FC.compose(cells[(g, Wf.object_map[x])], Fg.morphism_map[cells[(f, x)]])
                if cells[(gf, x)] != expected:
                    return False
    # naturality at shape 2-cells
    for alpha in shape.two_cells:
        f, g = shape.src2(alpha), shape.tgt2(alpha)
        A, B = shape.one_cell_hom[f]
        FB = F.ob[B]
        Falpha, Walpha = F.cell[alpha], W.cell[alpha]
        for x in W.ob[A].objects:
            lhs = FB.compose(cells[(g, x)], Falpha.component[t[A].object_map[x]])
            rhs = FB.compose(t[B].morphism_map[Walpha.component[x]], cells[(f, x)])
            if lhs != rhs:
                return False
    return True


def _cat_cone_morphisms(W, F, c1, c2):
    shape = W.shape
    per_object = []
    for A in sorted(shape.objects):
        nats = fincat.enumerate_nat_transformations(c1.t[A], c2.t[A])
        if not nats:
            return
        per_object.append((A, nats))
    for combo in itertools.product(*(nats for _, nats in per_object)):
        rho = {A: nat for (A, _), nat in zip(per_object, combo)}
        ok = True
        for f in shape.one_cells:
            A, B = shape.one_cell_hom[f]
            FB, Ff, Wf = F.ob[B], F.arrow[f], W.arrow[f]
            for x in W.ob[A].objects:
                lhs = FB.compose(c2.cells[(f, x)], Ff.morphism_map[rho[A].component[x]])
                rhs = FB.compose(rho[B].component[Wf.object_map[x]], c1.cells[(f, x)])
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield CatConeMorphism(rho)


@dataclass
class CatLimitResult:
    limit: FinCategory
    cones: CatConesCategory
    weight: CatDiagram
    diagram: CatDiagram
    sigma_members: frozenset
    tag: str
    probe_reports: dict = field(default_factory=dict)
    probe_verified: bool = False

    def evaluation_functor(self, A, x):
        """xi_A(x): the evaluation at (A, x) as a functor L -> FA."""
        FA = self.diagram.ob[A]
        return validate_functor(
            f"ev<{A},{x}>", self.limit, FA,
            {cid: self.cones.cones[cid].t[A].object_map[x] for cid in self.limit.objects},
            {mid: self.cones.arrows[mid].rho[A].component[x] for mid in self.limit.morphisms},
        )


def default_probes():
    from . import fixtures

    return {
        "empty": fixtures.cat_empty(),
        "one": fixtures.cat_one(),
        "two": fixtures.cat_two(),
        "par": fixtures.cat_par(),
    }


def cat_limit_construct(W, F, sigma, tag, probes=None, budget=None):
    """Build the sigma-omega-limit of a Cat_fin-valued diagram and verify it
    against the probe list."""
    sigma_members = frozenset(sigma.members if hasattr(sigma, "members") else sigma)
    cones = sigma_omega_transformations(W, F, sigma_members, tag, name=f"lim[{W.name},{F.name}]",
                                        budget=budget)
    result = CatLimitResult(cones.category, cones, W, F, sigma_members, tag)
    probes = default_probes() if probes is None else probes
    all_ok = bool(probes)
    for pname, P in probes.items():
        ok = _verify_probe(result, P, budget)
        result.probe_reports[pname] = ok
        all_ok = all_ok and ok
    result.probe_verified = all_ok
    return result


def _postcompose_diagram(F, P, budget=None):
    """F^P: A |-> [P, FA], with post-composition functors and whiskering."""
    shape = F.shape
    fcs = {A: functor_category(P, F.ob[A], budget=budget) for A in shape.objects}

    def find_functor_id(A, fun):
        for fid, g in fcs[A].functor_of.items():
            if g.object_map == fun.object_map and g.morphism_map == fun.morphism_map:
                return fid
        raise TwoCheckError("functor not found in functor category")

    def find_nat_id(A, src_id, tgt_id, component):
        cat = fcs[A].category
        for mid, nat in fcs[A].transformation_of.items():
            if cat.source[mid] == src_id and cat.target[mid] == tgt_id and nat.component == component:
                return mid
        raise TwoCheckError("transformation not found in functor category")

    ob = {A: fcs[A].category for A in shape.objects}
    arrow = {}
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        Ff = F.arrow[f]
        omap, mmap = {}, {}
        for fid, g in fcs[A].functor_of.items():
            omap[fid] = find_functor_id(B, fincat.compose_functors(Ff, g))
        for mid, nat in fcs[A].transformation_of.items():
            whiskered = {p: Ff.morphism_map[nat.component[p]] for p in P.objects}
            mmap[mid] = find_nat_id(
                B, omap[fcs[A].category.source[mid]], omap[fcs[A].category.target[mid]], whiskered
            )
        arrow[f] = validate_functor(f"({f})_*", fcs[A].category, fcs[B].category, omap, mmap)
    cell = {}
    for alpha in shape.two_cells:
        f, g = shape.src2(alpha), shape.tgt2(alpha)
        A, B = shape.one_cell_hom[f]
        Falpha = F.cell[alpha]
        component = {}
        for fid, gfun in fcs[A].functor_of.items():
            comp = {p: Falpha.component[gfun.object_map[p]] for p in P.objects}
            component[fid] = find_nat_id(B, arrow[f].object_map[fid], arrow[g].object_map[fid], comp)
        cell[alpha] = NatTransformation(arrow[f], arrow[g], component)
    return validate_cat_diagram(f"{F.name}^", shape, ob, arrow, cell), fcs


def _verify_probe(result, P, budget=None):
    """Pre-composition FC(P, L) -> Cones^W(P, F) is an isomorphism."""
    W, F = result.weight, result.diagram
    FP, fcs = _postcompose_diagram(F, P, budget)
    cones_at_P = sigma_omega_transformations(W, FP, result.sigma_members, result.tag,
                                             name="conesP", budget=budget)
    L_fc = functor_category(P, result.limit, budget=budget)

    def find_fc_id(A, omap, mmap):
        for fid, g in fcs[A].functor_of.items():
            if g.object_map == omap and g.morphism_map == mmap:
                return fid
        raise TwoCheckError("induced functor not found")

    def find_fc_nat(A, src_id, tgt_id, component):
        cat = fcs[A].category
        for mid, nat in fcs[A].transformation_of.items():
            if cat.source[mid] == src_id and cat.target[mid] == tgt_id and nat.component == component:
                return mid
        raise TwoCheckError("induced transformation not found")

    shape = W.shape
    object_map = {}
    for gid, G in L_fc.functor_of.items():
        t = {}
        for A in shape.objects:
            omap, mmap = {}, {}
            for x in W.ob[A].objects:
                fun_o = {p: result.cones.cones[G.object_map[p]].t[A].object_map[x] for p in P.objects}
                fun_m = {pm: result.cones.arrows[G.morphism_map[pm]].rho[A].component[x]
                         for pm in P.morphisms}
                omap[x] = find_fc_id(A, fun_o, fun_m)
            for phi in W.ob[A].morphisms:
                x, y = W.ob[A].source[phi], W.ob[A].target[phi]
                comp = {p: result.cones.cones[G.object_map[p]].t[A].morphism_map[phi]
                        for p in P.objects}
                mmap[phi] = find_fc_nat(A, omap[x], omap[y], comp)
            t[A] = FinFunctor(f"t<{A}>", W.ob[A], fcs[A].category, omap, mmap)
        cells = {}
        for f in shape.one_cells:
            A, B = shape.one_cell_hom[f]
            for x in W.ob[A].objects:
                comp = {p: result.cones.cones[G.object_map[p]].cells[(f, x)] for p in P.objects}
                src_id = FP.arrow[f].object_map[t[A].object_map[x]]
                tgt_id = t[B].object_map[W.arrow[f].object_map[x]]
                cells[(f, x)] = find_fc_nat(B, src_id, tgt_id, comp)
        key = CatCone(t, cells).key()
        oid = cones_at_P.cone_index.get(key)
        if oid is None:
            return False
        object_map[gid] = oid

    morphism_map = {}
    for nid, nat in L_fc.transformation_of.items():
        rho = {}
        for A in shape.objects:
            component = {}
            for x in W.ob[A].objects:
                comp = {p: result.cones.arrows[nat.component[p]].rho[A].component[x] for p in P.objects}
                src_g = L_fc.category.source[nid]
                tgt_g = L_fc.category.target[nid]
                component[x] = find_fc_nat(
                    A,
                    object_of_cone_slot(cones_at_P, object_map[src_g], A, x),
                    object_of_cone_slot(cones_at_P, object_map[tgt_g], A, x),
                    comp,
                )
            src_cone = cones_at_P.cones[object_map[L_fc.category.source[nid]]]
            tgt_cone = cones_at_P.cones[object_map[L_fc.category.target[nid]]]
            rho[A] = NatTransformation(src_cone.t[A], tgt_cone.t[A], component)
        key = CatConeMorphism(rho).key()
        mid = cones_at_P.arrow_index.get(
            (object_map[L_fc.category.source[nid]], object_map[L_fc.category.target[nid]], key)
        )
        if mid is None:
            return False
        morphism_map[nid] = mid

    comparison = validate_functor("probe", L_fc.category, cones_at_P.category, object_map, morphism_map)
    return is_isomorphism_of_categories(comparison)


def object_of_cone_slot(cones_cat, cone_id, A, x):
    return cones_cat.cones[cone_id].t[A].object_map[x]

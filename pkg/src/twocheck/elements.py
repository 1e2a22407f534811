"""The 2-category of elements of a Cat-valued weight, and the
weighted-versus-conical cone correspondence.

Objects of El_W are pairs (x, A) with x in WA; 1-cells (f, phi): (x,A) -> (y,B)
consist of f: A -> B in the shape and phi: Wf(x) -> y in WB, composed by
(g, psi).(f, phi) = (g.f, psi . Wg(phi)); 2-cells (f,phi) => (g,psi) are shape
2-cells al: f => g with psi . (W al)_x = phi.  The projection sends everything
to its first component, and id_Sigma consists of the (f, identity) arrows
with f in Sigma.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from . import fincat, limits
from .errors import RestrictionFailure, TwoCheckError, raise_first
from .fincat import guard_budget, validate_functor
from .limits import (
    OMEGA,
    OMEGA_OP,
    ConesCategory,
    ConicalCone,
    WeightedCone,
    cones_category_conical,
    cones_category_weighted,
)
from .twocat import (
    ArrowFamily,
    TwoCategory,
    TwoFunctor,
    validate_arrow_family,
    validate_two_category,
    validate_two_functor,
)


@dataclass(frozen=True)
class ElementsTwoCategory:
    two_category: TwoCategory
    projection: TwoFunctor
    id_sigma: ArrowFamily
    object_data: Mapping     # object id -> (x, A)
    one_data: Mapping        # 1-cell id -> (f, phi, src object id, tgt object id)
    two_data: Mapping        # 2-cell id -> (alpha, src 1-cell id, tgt 1-cell id)
    object_index: Mapping    # (x, A) -> object id
    one_index: Mapping       # (f, phi, src id) -> 1-cell id


def build_elements(W, sigma, budget=None):
    """Construct El_W with its projection and the family id_Sigma."""
    shape = W.shape
    if sigma.host != shape:
        raise TwoCheckError("sigma must live on the weight's shape")

    object_data, object_index = {}, {}
    for A in shape.objects:
        for x in W.ob[A].objects:
            oid = f"({x},{A})"
            object_data[oid] = (x, A)
            object_index[(x, A)] = oid

    one_data, one_index = {}, {}
    base_count = {}
    raw = []
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        Wf = W.arrow[f]
        WB = W.ob[B]
        for x in W.ob[A].objects:
            fx = Wf.object_map[x]
            for phi in WB.morphisms:
                if WB.source[phi] != fx:
                    continue
                y = WB.target[phi]
                raw.append((f, phi, object_index[(x, A)], object_index[(y, B)]))
    guard_budget(len(raw), "elements 1-cells", budget)
    for f, phi, s, t in raw:
        base_count[(f, phi)] = base_count.get((f, phi), 0) + 1
    for f, phi, s, t in raw:
        cid = f"({f},{phi})" if base_count[(f, phi)] == 1 else f"({f},{phi})@{s}"
        one_data[cid] = (f, phi, s, t)
        one_index[(f, phi, s)] = cid

    two_data, two_index = {}, {}
    for alpha in shape.two_cells:
        f, g = shape.src2(alpha), shape.tgt2(alpha)
        A, B = shape.one_cell_hom[f]
        Walpha = W.cell[alpha]
        WB = W.ob[B]
        for x in W.ob[A].objects:
            src_o = object_index[(x, A)]
            step = Walpha.component[x]
            for cid1, (f1, phi1, s1, t1) in one_data.items():
                if f1 != f or s1 != src_o:
                    continue
                # psi with psi . (W alpha)_x = phi1
                for cid2, (g2, psi2, s2, t2) in one_data.items():
                    if g2 != g or s2 != src_o or t2 != t1:
                        continue
                    if WB.compose(psi2, step) == phi1:
                        tid = f"[{alpha}:{cid1}=>{cid2}]"
                        two_data[tid] = (alpha, cid1, cid2)
                        two_index[(alpha, cid1, cid2)] = tid
    guard_budget(len(two_data), "elements 2-cells", budget)

    # hom categories: vertical composition composes the underlying alphas
    homs = {}
    for po in object_data:
        for qo in object_data:
            cells = [c for c, (_, _, s, t) in one_data.items() if s == po and t == qo]
            mors = [m for m, (_, c1, _) in two_data.items() if one_data[c1][2] == po and one_data[c1][3] == qo]
            source = {m: two_data[m][1] for m in mors}
            target = {m: two_data[m][2] for m in mors}
            identity = {}
            for c in cells:
                f, phi, s, t = one_data[c]
                identity[c] = two_index[(shape.id2(f), c, c)]
            comp = {}
            for m2 in mors:
                for m1 in mors:
                    if target[m1] != source[m2]:
                        continue
                    a2, _, c2t = two_data[m2]
                    a1, c1s, _ = two_data[m1]
                    comp[(m2, m1)] = two_index[(shape.vcomp(a2, a1), c1s, c2t)]
            homs[(po, qo)] = {
                "name": f"El.hom({po},{qo})",
                "objects": cells,
                "morphisms": mors,
                "source": source,
                "target": target,
                "identity": identity,
                "composition": comp,
            }

    identity_1 = {}
    for oid, (x, A) in object_data.items():
        identity_1[oid] = one_index[(shape.id1(A), W.ob[A].identity[x], oid)]

    hcomp1 = {}
    for c2, (g, psi, s2, t2) in one_data.items():
        for c1, (f, phi, s1, t1) in one_data.items():
            if t1 != s2:
                continue
            gf = shape.hcomp1(g, f)
            B2 = shape.one_cell_hom[g][1]
            Wg = W.arrow[g]
            composite_phi = W.ob[B2].compose(psi, Wg.morphism_map[phi])
            hcomp1[(c2, c1)] = one_index[(gf, composite_phi, s1)]

    hcomp2 = {}
    for m2, (b2, c2s, c2t) in two_data.items():
        for m1, (b1, c1s, c1t) in two_data.items():
            if one_data[c1s][3] != one_data[c2s][2]:
                continue
            hcomp2[(m2, m1)] = two_index[(
                shape.hcomp2(b2, b1),
                hcomp1[(c2s, c1s)],
                hcomp1[(c2t, c1t)],
            )]

    El = validate_two_category(f"El<{W.name}>", sorted(object_data), homs, identity_1,
                               hcomp1, hcomp2, budget=budget)

    projection = validate_two_functor(
        f"proj<{W.name}>", El, shape,
        {oid: A for oid, (x, A) in object_data.items()},
        {cid: f for cid, (f, phi, s, t) in one_data.items()},
        {tid: alpha for tid, (alpha, _, _) in two_data.items()},
    )

    id_members = [
        cid for cid, (f, phi, s, t) in one_data.items()
        if f in sigma.members and W.ob[shape.one_cell_hom[f][1]].is_identity(phi)
    ]
    id_sigma = validate_arrow_family(El, id_members)

    return ElementsTwoCategory(El, projection, id_sigma, object_data, one_data, two_data,
                               object_index, one_index)


@dataclass(frozen=True)
class ConeCorrespondence:
    to_conical: fincat.FinFunctor
    to_weighted: fincat.FinFunctor
    weighted: ConesCategory
    conical: ConesCategory


def weighted_to_conical_cone(el, cone, conical_diagram):
    """eta |-> theta: theta_(x,A) = eta_A(x), theta_(f,phi) = eta_B(phi) . (eta_f)_x
    (mirrored for the oplax orientation)."""
    W = cone.weight
    shape = W.shape
    K = cone.diagram.target
    c1 = {oid: cone.comp_obj[(A, x)] for oid, (x, A) in el.object_data.items()}
    c2 = {}
    for cid, (f, phi, s, t) in el.one_data.items():
        x, A = el.object_data[s]
        B = shape.one_cell_hom[f][1]
        structural = cone.cells[(f, x)]
        action = cone.comp_mor[(B, phi)]
        if cone.orientation == OMEGA:
            c2[cid] = K.vcomp(action, structural)
        else:
            c2[cid] = K.vcomp(structural, action)
    return ConicalCone(conical_diagram, cone.vertex, c1, c2, cone.orientation)


def conical_to_weighted_cone(el, cone, W, F):
    """theta |-> eta via eta_A(x) = theta_(x,A), (eta_f)_x = theta_(f,id),
    eta_A(phi) = theta_(id_A, phi)."""
    shape = W.shape
    comp_obj = {}
    for oid, (x, A) in el.object_data.items():
        comp_obj[(A, x)] = cone.component_1[oid]
    comp_mor = {}
    for A in shape.objects:
        WA = W.ob[A]
        for phi in WA.morphisms:
            src_el = WA.source[phi]
            cid = el.one_index[(shape.id1(A), phi, el.object_index[(src_el, A)])]
            comp_mor[(A, phi)] = cone.component_2[cid]
    cells = {}
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        Wf = W.arrow[f]
        for x in W.ob[A].objects:
            cid = el.one_index[(f, W.ob[B].identity[Wf.object_map[x]], el.object_index[(x, A)])]
            cells[(f, x)] = cone.component_2[cid]
    return WeightedCone(W, F, cone.vertex, comp_obj, comp_mor, cells, cone.orientation)


def cone_correspondence(W, F, sigma, omega, vertex, orientation=OMEGA, omega_prime=None,
                        el=None, budget=None):
    """The mutually inverse functors between the weighted sigma-omega cone
    category and the conical one over El_W (w.r.t. id_Sigma), verified to be
    an isomorphism pair preserving the family restrictions."""
    el = el or build_elements(W, sigma, budget=budget)
    shape = W.shape
    K = F.target
    from .twocat import compose_two_functors, validate_cell_family

    conical_diagram = compose_two_functors(F, el.projection)
    omega_el = omega  # omega lives on K either way
    wcat = cones_category_weighted(W, F, sigma, omega, vertex, orientation, omega_prime, budget)
    ccat = cones_category_conical(conical_diagram, el.id_sigma, omega, vertex, orientation,
                                  omega_prime, budget)

    obj_map, obj_map_back = {}, {}
    for cid, wcone in wcat.cones.items():
        image = weighted_to_conical_cone(el, wcone, conical_diagram)
        target_id = ccat.cone_index.get(image.key())
        if target_id is None:
            raise RestrictionFailure(
                "weighted cone maps outside the restricted conical cone category",
                cone=cid)
        obj_map[cid] = target_id
    for cid, ccone in ccat.cones.items():
        image = conical_to_weighted_cone(el, ccone, W, F)
        target_id = wcat.cone_index.get(image.key())
        if target_id is None:
            raise RestrictionFailure(
                "conical cone maps outside the weighted cone category", cone=cid)
        obj_map_back[cid] = target_id

    mor_map, mor_map_back = {}, {}
    for mid, comp in wcat.arrows.items():
        src = wcat.category.source[mid]
        tgt = wcat.category.target[mid]
        image_comp = {}
        for oid, (x, A) in el.object_data.items():
            image_comp[oid] = comp[(A, x)]
        key = (obj_map[src], obj_map[tgt], tuple(sorted(image_comp.items())))
        target_mid = ccat.arrow_index.get(key)
        if target_mid is None:
            raise RestrictionFailure("weighted cone morphism maps outside", morphism=mid)
        mor_map[mid] = target_mid
    for mid, comp in ccat.arrows.items():
        src = ccat.category.source[mid]
        tgt = ccat.category.target[mid]
        image_comp = {}
        for oid, (x, A) in el.object_data.items():
            image_comp[(A, x)] = comp[oid]
        key = (obj_map_back[src], obj_map_back[tgt], tuple(sorted(image_comp.items())))
        target_mid = wcat.arrow_index.get(key)
        if target_mid is None:
            raise RestrictionFailure("conical cone morphism maps outside", morphism=mid)
        mor_map_back[mid] = target_mid

    to_conical = validate_functor("w2c", wcat.category, ccat.category, obj_map, mor_map)
    to_weighted = validate_functor("c2w", ccat.category, wcat.category, obj_map_back, mor_map_back)

    for o in wcat.category.objects:
        if obj_map_back[obj_map[o]] != o:
            raise RestrictionFailure("correspondence not involutive on weighted objects", object=o)
    for o in ccat.category.objects:
        if obj_map[obj_map_back[o]] != o:
            raise RestrictionFailure("correspondence not involutive on conical objects", object=o)
    for m in wcat.category.morphisms:
        if mor_map_back[mor_map[m]] != m:
            raise RestrictionFailure("correspondence not involutive on weighted morphisms", morphism=m)
    for m in ccat.category.morphisms:
        if mor_map[mor_map_back[m]] != m:
            raise RestrictionFailure("correspondence not involutive on conical morphisms", morphism=m)

    return ConeCorrespondence(to_conical, to_weighted, wcat, ccat)

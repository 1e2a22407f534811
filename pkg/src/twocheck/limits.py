"""Cone categories, exhaustive limit search and certification.

Conical cones with vertex E over F: A -> B are (op)lax transformations from
the constant 2-functor at E to F, so their validation and enumeration reuse
the transform module.  Orientation "lax" is the omega case (structural cells
Ff.t_A => t_B); "oplax" is the omega-op case.

A LimitCertificate records, per base object B, the object- and arrow-level
bijection tables of the post-composition functor hom(B,L) -> Cones(B,F),
plus compatibility verdicts for requested cell families.  Everything is
re-checkable from the tables; nothing is trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from . import fincat, transform
from .errors import (CompositionAxiom, ResourceBound, TwoCellNaturality,
    TwoCheckError, TypeMismatch, UnitAxiom, raise_first)
from .fincat import FinCategory, FinFunctor, guard_budget, is_isomorphism_of_categories, validate_category
from .transform import LAX, OPLAX, enumerate_lax_transformations, enumerate_modifications, is_sigma_omega
from .twocat import ArrowFamily, CellFamily, TwoCategory, TwoFunctor, constant_two_functor

OMEGA = LAX        # structural cells Ff.t_A => t_B
OMEGA_OP = OPLAX   # reversed


# ---------------------------------------------------------------------------
# Conical cones


@dataclass(frozen=True, eq=False)
class ConicalCone:
    diagram: TwoFunctor
    vertex: str
    component_1: Mapping
    component_2: Mapping
    orientation: str

    def key(self):
        c1 = ";".join(f"{a}={t}" for a, t in sorted(self.component_1.items()))
        c2 = ";".join(f"{f}={t}" for f, t in sorted(self.component_2.items()))
        return f"cone[{c1}|{c2}]"

    def __eq__(self, other):
        if not isinstance(other, ConicalCone):
            return NotImplemented
        return (
            self.diagram == other.diagram
            and self.vertex == other.vertex
            and dict(self.component_1) == dict(other.component_1)
            and dict(self.component_2) == dict(other.component_2)
            and self.orientation == other.orientation
        )


def validate_conical_cone(F, vertex, component_1, component_2, orientation=OMEGA):
    delta = constant_two_functor(F.source, F.target, vertex)
    transform.validate_lax_transformation(delta, F, component_1, component_2, orientation)
    return ConicalCone(F, vertex, dict(component_1), dict(component_2), orientation)


def cone_is_sigma_omega(cone, sigma, omega):
    return all(cone.component_2[f] in omega.members for f in sigma.members)


@dataclass(frozen=True)
class ConesCategory:
    category: FinCategory
    cones: Mapping            # object id -> cone
    arrows: Mapping           # morphism id -> component dict
    cone_index: Mapping       # cone key -> object id
    arrow_index: Mapping      # (src id, tgt id, component tuple) -> morphism id
    vertex: str


def _assemble_cones_category(name, vertex, cones, morphism_components, compose_components, omega_prime):
    """Shared assembly for conical and weighted cone categories.

    cones: list of cone values with .key(); morphism_components(c1, c2):
    iterable of component dicts; compose_components(second, first): dict.
    """
    cones = sorted(cones, key=lambda c: c.key())
    cone_ids, cone_index = {}, {}
    for i, cone in enumerate(cones):
        cid = f"c{i}"
        cone_ids[cid] = cone
        cone_index[cone.key()] = cid

    arrows, arrow_index = {}, {}
    src, tgt = {}, {}
    identity = {}
    ordered = sorted(cone_ids)
    for c1 in ordered:
        for c2 in ordered:
            for comp in morphism_components(cone_ids[c1], cone_ids[c2]):
                if omega_prime is not None and not all(v in omega_prime.members for v in comp.values()):
                    continue
                mid = f"m{len(arrows)}"
                arrows[mid] = comp
                src[mid], tgt[mid] = c1, c2
                arrow_index[(c1, c2, tuple(sorted(comp.items())))] = mid
                if c1 == c2 and _all_identities(cone_ids[c1], comp):
                    identity[c1] = mid
    composition = {}
    for m2 in arrows:
        for m1 in arrows:
            if tgt[m1] != src[m2]:
                continue
            comp = compose_components(arrows[m2], arrows[m1])
            composition[(m2, m1)] = arrow_index[(src[m1], tgt[m2], tuple(sorted(comp.items())))]
    cat = validate_category(name, sorted(cone_ids), sorted(arrows), src, tgt, identity, composition)
    return ConesCategory(cat, cone_ids, arrows, cone_index, arrow_index, vertex)


def _all_identities(cone, comp):
    K = cone.diagram.target
    return all(K.homs[K.two_cell_hom[v]].is_identity(v) for v in comp.values())


def cones_category_conical(F, sigma, omega, vertex, orientation=OMEGA, omega_prime=None, budget=None):
    """The category of sigma-omega cones with the given vertex (morphisms
    restricted to Omega'-component ones when omega_prime is given)."""
    K = F.target
    delta = constant_two_functor(F.source, K, vertex)
    all_cones = []
    for t in enumerate_lax_transformations(delta, F, orientation, budget=budget):
        if is_sigma_omega(t, sigma, omega):
            all_cones.append(ConicalCone(F, vertex, t.component_1, t.component_2, orientation))

    def morphisms_between(c1, c2):
        t1 = transform.LaxTransformation(delta, F, c1.component_1, c1.component_2, orientation)
        t2 = transform.LaxTransformation(delta, F, c2.component_1, c2.component_2, orientation)
        for rho in enumerate_modifications(t1, t2):
            yield dict(rho.component)

    def compose(second, first):
        return {a: K.vcomp(second[a], first[a]) for a in first}

    return _assemble_cones_category(
        f"Cones({vertex},{F.name})", vertex, all_cones, morphisms_between, compose, omega_prime
    )


def postcompose(cone, B, cones_cat):
    """The functor hom(B, L) -> Cones(B, F) given by post-composition with
    the cone; its action on a 2-cell is componentwise whiskering."""
    F = cone.diagram
    K = F.target
    hom = K.hom(B, cone.vertex)
    object_map = {}
    for h in hom.objects:
        c1 = {a: K.hcomp1(cone.component_1[a], h) for a in cone.component_1}
        c2 = {f: K.hcomp2(cone.component_2[f], K.id2(h)) for f in cone.component_2}
        shifted = ConicalCone(F, B, c1, c2, cone.orientation)
        oid = cones_cat.cone_index.get(shifted.key())
        if oid is None:
            return None
        object_map[h] = oid
    morphism_map = {}
    for beta in hom.morphisms:
        comp = {a: K.hcomp2(K.id2(cone.component_1[a]), beta) for a in cone.component_1}
        mid = cones_cat.arrow_index.get(
            (object_map[hom.source[beta]], object_map[hom.target[beta]], tuple(sorted(comp.items())))
        )
        if mid is None:
            return None
        morphism_map[beta] = mid
    return fincat.validate_functor(
        f"post<{cone.vertex};{B}>", hom, cones_cat.category, object_map, morphism_map
    )


# ---------------------------------------------------------------------------
# Certificates


@dataclass
class LimitCertificate:
    kind: str                    # "conical" | "weighted"
    diagram: object              # TwoFunctor (conical) or (Weight, TwoFunctor)
    sigma: ArrowFamily
    omega: CellFamily
    orientation: str
    vertex: str
    cone: object
    tables: dict                 # B -> {"objects": {...}, "arrows": {...}}
    cones_categories: dict       # B -> ConesCategory
    all_vertices: tuple = ()
    compatibility: dict = field(default_factory=dict)
    probe_verified: bool = False

    @property
    def base(self):
        if self.kind == "conical":
            return self.diagram.target
        return self.diagram[1].target


def certify_cone(F, sigma, omega, cone, orientation=OMEGA, omega_primes=None, cones_cache=None, budget=None):
    """Check that the given cone is a limit cone: post-composition is an
    isomorphism of categories for every base object.  Returns a certificate
    or None when the universal property fails."""
    K = F.target
    cache = cones_cache if cones_cache is not None else {}
    tables = {}
    for B in sorted(K.objects):
        if B not in cache:
            cache[B] = cones_category_conical(F, sigma, omega, B, orientation, budget=budget)
        cc = cache[B]
        hom = K.hom(B, cone.vertex)
        if len(hom.objects) != len(cc.category.objects) or len(hom.morphisms) != len(cc.category.morphisms):
            return None
        functor = postcompose(cone, B, cc)
        if functor is None or not is_isomorphism_of_categories(functor):
            return None
        tables[B] = {"objects": dict(functor.object_map), "arrows": dict(functor.morphism_map)}

    ident_image = tables[cone.vertex]["objects"][K.id1(cone.vertex)]
    if cache[cone.vertex].cones[ident_image].key() != cone.key():
        raise TwoCheckError("post-composition at the vertex does not recover the cone")

    cert = LimitCertificate(
        "conical", F, sigma, omega, orientation, cone.vertex, cone, tables,
        {B: cache[B] for B in K.objects},
    )
    for name, fam in (omega_primes or {}).items():
        cert.compatibility[name] = check_compatibility(cert, fam)
    return cert


def find_conical_limit(F, sigma, omega, orientation=OMEGA, omega_primes=None, budget=None):
    """Exhaustive search: every vertex, every sigma-omega cone, first
    certificate in canonical order wins; all successful vertices recorded."""
    K = F.target
    cache = {}
    for B in sorted(K.objects):
        cache[B] = cones_category_conical(F, sigma, omega, B, orientation, budget=budget)
    winner = None
    successful = []
    for L in sorted(K.objects):
        found = None
        for cid in sorted(cache[L].cones):
            cone = cache[L].cones[cid]
            cert = certify_cone(F, sigma, omega, cone, orientation, None, cones_cache=cache, budget=budget)
            if cert is not None:
                found = cert
                break
        if found is not None:
            successful.append(L)
            if winner is None:
                winner = found
    if winner is None:
        return None
    winner.all_vertices = tuple(successful)
    for name, fam in (omega_primes or {}).items():
        winner.compatibility[name] = check_compatibility(winner, fam)
    return winner


def check_compatibility(cert, omega_prime):
    """Whether the limit's 2-cell bijection restricts to Omega' (per base
    object).  Computed two ways and cross-checked: the semantic reading
    (unique preimage of an Omega'-component cone morphism lies in Omega')
    and the restricted-functor-is-isomorphism reading."""
    K = cert.base
    semantic = True
    for B, table in cert.tables.items():
        inverse = {mid: beta for beta, mid in table["arrows"].items()}
        cc = cert.cones_categories[B]
        for mid, comp in cc.arrows.items():
            if all(v in omega_prime.members for v in comp.values()):
                if inverse[mid] not in omega_prime.members:
                    semantic = False
    restricted = True
    for B, table in cert.tables.items():
        cc = cert.cones_categories[B]
        restricted_domain = [beta for beta in table["arrows"] if beta in omega_prime.members]
        restricted_codomain = [
            mid for mid, comp in cc.arrows.items()
            if all(v in omega_prime.members for v in comp.values())
        ]
        image = {table["arrows"][beta] for beta in restricted_domain}
        if not (len(image) == len(restricted_domain) == len(restricted_codomain)
                and image == set(restricted_codomain)):
            restricted = False
    if semantic != restricted:
        raise TwoCheckError("compatibility computations disagree (engine bug)")
    return semantic


def verify_limit(cert):
    """Re-run every bijection check recorded in a certificate."""
    findings = []
    if cert.kind == "conical":
        F = cert.diagram
        K = F.target
        for B in sorted(K.objects):
            cc = cert.cones_categories[B]
            functor = postcompose(cert.cone, B, cc)
            if functor is None or not is_isomorphism_of_categories(functor):
                findings.append(("postcompose-iso", B, "failed"))
            elif dict(functor.object_map) != cert.tables[B]["objects"] or (
                dict(functor.morphism_map) != cert.tables[B]["arrows"]
            ):
                findings.append(("table-mismatch", B, "failed"))
    else:
        W, F = cert.diagram
        K = F.target
        for B in sorted(K.objects):
            cc = cert.cones_categories[B]
            functor = precompose(cert.cone, B, cc)
            if functor is None or not is_isomorphism_of_categories(functor):
                findings.append(("precompose-iso", B, "failed"))
    for name, value in cert.compatibility.items():
        findings.append(("compatibility", name, "recorded-pass" if value else "recorded-fail"))
    return {"ok": all(outcome != "failed" for _, _, outcome in findings), "findings": findings}


# ---------------------------------------------------------------------------
# Weighted cones


@dataclass(frozen=True, eq=False)
class WeightedCone:
    weight: object               # fixtures.CatDiagram on the shape
    diagram: TwoFunctor          # F: shape -> B
    vertex: str
    comp_obj: Mapping            # (A, x) -> 1-cell
    comp_mor: Mapping            # (A, phi) -> 2-cell
    cells: Mapping               # (f, x) -> 2-cell
    orientation: str

    def key(self):
        o = ";".join(f"{a}.{x}={t}" for (a, x), t in sorted(self.comp_obj.items()))
        m = ";".join(f"{a}.{p}={t}" for (a, p), t in sorted(self.comp_mor.items()))
        c = ";".join(f"{f}.{x}={t}" for (f, x), t in sorted(self.cells.items()))
        return f"wcone[{o}|{m}|{c}]"

    def __eq__(self, other):
        if not isinstance(other, WeightedCone):
            return NotImplemented
        return self.key() == other.key() and self.vertex == other.vertex


def validate_weighted_cone(W, F, vertex, comp_obj, comp_mor, cells, orientation=OMEGA):
    """The lax-cone axioms of a weight-indexed cone, mirrored for oplax.

    In the oplax case *all* structural 2-cells valued in the base reverse:
    the cells (t_f)_x and the functorial action t_A(phi) alike.
    """
    K = F.target
    shape = F.source
    violations = []
    for A in shape.objects:
        WA = W.ob[A]
        homAE = K.homs[(vertex, F.object_map[A])]
        for x in WA.objects:
            t = comp_obj.get((A, x))
            if t is None or t not in homAE.objects:
                violations.append(TypeMismatch("component 1-cell missing or misplaced", object=A, element=x))
        raise_first(violations)
        for phi in WA.morphisms:
            x, y = WA.source[phi], WA.target[phi]
            want = ((A, x), (A, y)) if orientation == OMEGA else ((A, y), (A, x))
            m = comp_mor.get((A, phi))
            if m is None or m not in homAE.morphisms or (
                homAE.source[m] != comp_obj[want[0]] or homAE.target[m] != comp_obj[want[1]]
            ):
                violations.append(TypeMismatch("component 2-cell misplaced", object=A, arrow=phi))
        raise_first(violations)
        # functoriality of t_A (contravariant when oplax)
        for x in WA.objects:
            if comp_mor[(A, WA.identity[x])] != K.id2(comp_obj[(A, x)]):
                violations.append(UnitAxiom("component functor misses identity", object=A, element=x))
        for g, f in WA.composable_pairs():
            gf = WA.compose(g, f)
            if orientation == OMEGA:
                expected = K.vcomp(comp_mor[(A, g)], comp_mor[(A, f)])
            else:
                expected = K.vcomp(comp_mor[(A, f)], comp_mor[(A, g)])
            if comp_mor[(A, gf)] != expected:
                violations.append(CompositionAxiom("component functor not functorial",
                                                             object=A, g=g, f=f))
        raise_first(violations)

    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        WA = W.ob[A]
        Wf = W.arrow[f]
        for x in WA.objects:
            cell = cells.get((f, x))
            left = K.hcomp1(F.one_map[f], comp_obj[(A, x)])     # Ff . t_A(x)
            right = comp_obj[(B, Wf.object_map[x])]             # t_B(Wf x)
            want = (left, right) if orientation == OMEGA else (right, left)
            if cell is None or cell not in K.two_cell_hom or (K.src2(cell), K.tgt2(cell)) != want:
                violations.append(TypeMismatch("structural cell misplaced", one_cell=f, element=x))
        raise_first(violations)

    # (L1/O1) naturality of the structural cells in x
    for f in shape.one_cells:
        A, B = shape.one_cell_hom[f]
        WA, Wf = W.ob[A], W.arrow[f]
        for phi in WA.morphisms:
            x, y = WA.source[phi], WA.target[phi]
            whisker = K.hcomp2(K.id2(F.one_map[f]), comp_mor[(A, phi)])
            imaged = comp_mor[(B, Wf.morphism_map[phi])]
            if orientation == OMEGA:
                lhs = K.vcomp(imaged, cells[(f, x)])
                rhs = K.vcomp(cells[(f, y)], whisker)
            else:
                lhs = K.vcomp(cells[(f, x)], imaged)
                rhs = K.vcomp(whisker, cells[(f, y)])
            if lhs != rhs:
                violations.append(TwoCellNaturality("structural cell not natural",
                                                              one_cell=f, arrow=phi))
    raise_first(violations)

    # (L2/O2) unit, (L3/O3) composition
    for A in shape.objects:
        for x in W.ob[A].objects:
            if cells[(shape.id1(A), x)] != K.id2(comp_obj[(A, x)]):
                violations.append(UnitAxiom("unit axiom fails", object=A, element=x))
    raise_first(violations)
    for g in shape.one_cells:
        for f in shape.one_cells:
            if shape.tgt1(f) != shape.src1(g):
                continue
            gf = shape.hcomp1(g, f)
            A = shape.one_cell_hom[f][0]
            Wf = W.arrow[f]
            for x in W.ob[A].objects:
                wfx = Wf.object_map[x]
                if orientation == OMEGA:
                    expected = K.vcomp(
                        cells[(g, wfx)],
                        K.hcomp2(K.id2(F.one_map[g]), cells[(f, x)]),
                    )
                else:
                    expected = K.vcomp(
                        K.hcomp2(K.id2(F.one_map[g]), cells[(f, x)]),
                        cells[(g, wfx)],
                    )
                if cells[(gf, x)] != expected:
                    violations.append(CompositionAxiom("composition axiom fails",
                                                                 g=g, f=f, element=x))
    raise_first(violations)

    # (L4/O4) naturality at 2-cells of the shape
    for alpha in shape.two_cells:
        f, g = shape.src2(alpha), shape.tgt2(alpha)
        A, B = shape.one_cell_hom[f]
        Walpha = W.cell[alpha]
        for x in W.ob[A].objects:
            whisker = K.hcomp2(F.two_map[alpha], K.id2(comp_obj[(A, x)]))
            imaged = comp_mor[(B, Walpha.component[x])]
            if orientation == OMEGA:
                lhs = K.vcomp(cells[(g, x)], whisker)
                rhs = K.vcomp(imaged, cells[(f, x)])
            else:
                lhs = K.vcomp(K.vcomp(whisker, cells[(f, x)]), imaged)
                rhs = cells[(g, x)]
            if lhs != rhs:
                violations.append(TwoCellNaturality("naturality at a shape 2-cell fails",
                                                              two_cell=alpha, element=x))
    raise_first(violations)
    return WeightedCone(W, F, vertex, dict(comp_obj), dict(comp_mor), dict(cells), orientation)


def weighted_cone_is_sigma_omega(cone, sigma, omega):
    return all(
        cone.cells[(f, x)] in omega.members
        for f in sigma.members
        for x in cone.weight.ob[cone.weight.shape.one_cell_hom[f][0]].objects
    )


def enumerate_weighted_cones(W, F, sigma, omega, vertex, orientation=OMEGA, budget=None):
    K = F.target
    shape = F.source
    results = []

    per_object = []
    for A in sorted(shape.objects):
        WA = W.ob[A]
        hom = K.homs[(vertex, F.object_map[A])]
        domain = WA if orientation == OMEGA else fincat.opposite_category(WA)
        funs = fincat.enumerate_functors(domain, hom, budget=budget)
        if not funs:
            return []
        per_object.append((A, funs))

    nonid1 = [f for f in shape.one_cells if not _shape_identity(shape, f)]

    for combo in itertools.product(*(funs for _, funs in per_object)):
        comp_obj, comp_mor = {}, {}
        for (A, _), fun in zip(per_object, combo):
            for x in W.ob[A].objects:
                comp_obj[(A, x)] = fun.object_map[x]
            for phi in W.ob[A].morphisms:
                comp_mor[(A, phi)] = fun.morphism_map[phi]
        cell_slots = []
        ok = True
        for f in nonid1:
            A, B = shape.one_cell_hom[f]
            for x in W.ob[A].objects:
                left = K.hcomp1(F.one_map[f], comp_obj[(A, x)])
                right = comp_obj[(B, W.arrow[f].object_map[x])]
                want = (left, right) if orientation == OMEGA else (right, left)
                cands = sorted(K.two_cells_between(*want))
                if f in sigma.members:
                    cands = [c for c in cands if c in omega.members]
                if not cands:
                    ok = False
                    break
                cell_slots.append(((f, x), cands))
            if not ok:
                break
        if not ok:
            continue
        for assignment in itertools.product(*(c for _, c in cell_slots)):
            cells = {slot: val for (slot, _), val in zip(cell_slots, assignment)}
            for A in shape.objects:
                for x in W.ob[A].objects:
                    cells[(shape.id1(A), x)] = K.id2(comp_obj[(A, x)])
            try:
                cone = validate_weighted_cone(W, F, vertex, comp_obj, comp_mor, cells, orientation)
            except TwoCheckError:
                continue
            if weighted_cone_is_sigma_omega(cone, sigma, omega):
                results.append(cone)
                guard_budget(len(results), "weighted cone enumeration", budget)
    return results


def _shape_identity(shape, f):
    a, b = shape.one_cell_hom[f]
    return a == b and f == shape.id1(a)


def _weighted_morphism_components(K, W, F, c1, c2):
    """All valid cone-morphism component families c1 -> c2."""
    shape = F.source
    slots = sorted(c1.comp_obj)
    choices = []
    for slot in slots:
        cands = sorted(K.two_cells_between(c1.comp_obj[slot], c2.comp_obj[slot]))
        if not cands:
            return
        choices.append(cands)
    oplax = c1.orientation == OPLAX
    for assignment in itertools.product(*choices):
        comp = dict(zip(slots, assignment))
        ok = True
        # naturality in x against the (possibly contravariant) component functors
        for A in shape.objects:
            WA = W.ob[A]
            for phi in WA.morphisms:
                x, y = WA.source[phi], WA.target[phi]
                if not oplax:
                    lhs = K.vcomp(c2.comp_mor[(A, phi)], comp[(A, x)])
                    rhs = K.vcomp(comp[(A, y)], c1.comp_mor[(A, phi)])
                else:
                    lhs = K.vcomp(comp[(A, x)], c1.comp_mor[(A, phi)])
                    rhs = K.vcomp(c2.comp_mor[(A, phi)], comp[(A, y)])
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for f in shape.one_cells:
            A, B = shape.one_cell_hom[f]
            Wf = W.arrow[f]
            for x in W.ob[A].objects:
                wfx = Wf.object_map[x]
                whisker = K.hcomp2(K.id2(F.one_map[f]), comp[(A, x)])
                if not oplax:
                    lhs = K.vcomp(c2.cells[(f, x)], whisker)
                    rhs = K.vcomp(comp[(B, wfx)], c1.cells[(f, x)])
                else:
                    lhs = K.vcomp(whisker, c1.cells[(f, x)])
                    rhs = K.vcomp(c2.cells[(f, x)], comp[(B, wfx)])
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield comp


def cones_category_weighted(W, F, sigma, omega, vertex, orientation=OMEGA, omega_prime=None, budget=None):
    K = F.target
    cones = enumerate_weighted_cones(W, F, sigma, omega, vertex, orientation, budget)

    def morphisms_between(c1, c2):
        yield from _weighted_morphism_components(K, W, F, c1, c2)

    def compose(second, first):
        return {slot: K.vcomp(second[slot], first[slot]) for slot in first}

    return _assemble_cones_category(
        f"WCones({vertex},{W.name},{F.name})", vertex, cones, morphisms_between, compose, omega_prime
    )


def precompose(cone, B, cones_cat):
    """hom(B, E) -> WCones(B, F) by pre-composition with the cone."""
    F = cone.diagram
    K = F.target
    hom = K.hom(B, cone.vertex)
    object_map = {}
    for h in hom.objects:
        comp_obj = {slot: K.hcomp1(t, h) for slot, t in cone.comp_obj.items()}
        comp_mor = {slot: K.hcomp2(m, K.id2(h)) for slot, m in cone.comp_mor.items()}
        cells = {slot: K.hcomp2(c, K.id2(h)) for slot, c in cone.cells.items()}
        shifted = WeightedCone(cone.weight, F, B, comp_obj, comp_mor, cells, cone.orientation)
        oid = cones_cat.cone_index.get(shifted.key())
        if oid is None:
            return None
        object_map[h] = oid
    morphism_map = {}
    for beta in hom.morphisms:
        comp = {slot: K.hcomp2(K.id2(t), beta) for slot, t in cone.comp_obj.items()}
        mid = cones_cat.arrow_index.get(
            (object_map[hom.source[beta]], object_map[hom.target[beta]], tuple(sorted(comp.items())))
        )
        if mid is None:
            return None
        morphism_map[beta] = mid
    return fincat.validate_functor(
        f"pre<{cone.vertex};{B}>", hom, cones_cat.category, object_map, morphism_map
    )


def certify_weighted_cone(W, F, sigma, omega, cone, orientation=OMEGA, omega_primes=None, budget=None):
    K = F.target
    cache, tables = {}, {}
    for B in sorted(K.objects):
        cache[B] = cones_category_weighted(W, F, sigma, omega, B, orientation, budget=budget)
        cc = cache[B]
        hom = K.hom(B, cone.vertex)
        if len(hom.objects) != len(cc.category.objects) or len(hom.morphisms) != len(cc.category.morphisms):
            return None
        functor = precompose(cone, B, cc)
        if functor is None or not is_isomorphism_of_categories(functor):
            return None
        tables[B] = {"objects": dict(functor.object_map), "arrows": dict(functor.morphism_map)}
    # xi = mu_E(id_E) on the nose
    ident_image = tables[cone.vertex]["objects"][K.id1(cone.vertex)]
    if cache[cone.vertex].cones[ident_image].key() != cone.key():
        raise TwoCheckError("pre-composition at the vertex does not recover the cone")
    cert = LimitCertificate(
        "weighted", (W, F), sigma, omega, orientation, cone.vertex, cone, tables,
        {B: cache[B] for B in K.objects},
    )
    for name, fam in (omega_primes or {}).items():
        cert.compatibility[name] = check_compatibility(cert, fam)
    return cert


def find_weighted_limit(W, F, sigma, omega, orientation=OMEGA, omega_primes=None, budget=None):
    K = F.target
    for L in sorted(K.objects):
        for cone in sorted(
            enumerate_weighted_cones(W, F, sigma, omega, L, orientation, budget), key=lambda c: c.key()
        ):
            cert = certify_weighted_cone(W, F, sigma, omega, cone, orientation, omega_primes, budget)
            if cert is not None:
                return cert
    return None


# ---------------------------------------------------------------------------
# Special limits: products, инserters, iso-inserters, equifiers


@dataclass
class SpecialLimitReport:
    kind: str
    base: TwoCategory
    data: dict
    candidate: dict
    checks: list
    compatibility: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(outcome for _, outcome, _ in self.checks)

    def check_failed(self):
        for name, outcome, witness in self.checks:
            if not outcome:
                return name, witness
        return None


def special_limit_check(K, kind, data, candidate, omega_primes=None):
    """Verify the quoted 1- and 2-dimensional universal properties of a
    product, inserter, iso-inserter or equifier candidate, exhaustively, and
    the specialized compatibility implication for each supplied family."""
    checks = []
    compatibility = {}
    omega_primes = omega_primes or {}
    if kind == "product":
        L, projections = candidate["vertex"], list(candidate["projections"])
        objects = list(data["objects"])
        for p, A in zip(projections, objects):
            if K.one_cell_hom.get(p) != (L, A):
                checks.append(("projection-typing", False, p))
        if not checks:
            checks.append(("projection-typing", True, ""))
        for E in sorted(K.objects):
            families = itertools.product(*(sorted(K.homs[(E, A)].objects) for A in objects))
            for qs in families:
                mediators = [h for h in K.homs[(E, L)].objects
                             if all(K.hcomp1(p, h) == q for p, q in zip(projections, qs))]
                checks.append((f"one-dim@{E}", len(mediators) == 1, ",".join(qs)))
                if len(mediators) != 1:
                    break
        for E in sorted(K.objects):
            hom = K.homs[(E, L)]
            for h in hom.objects:
                for k in hom.objects:
                    betas = itertools.product(
                        *(sorted(K.two_cells_between(K.hcomp1(p, h), K.hcomp1(p, k))) for p in projections)
                    )
                    for family in betas:
                        mediators = [
                            beta for beta in hom.morphisms
                            if hom.source[beta] == h and hom.target[beta] == k
                            and all(K.hcomp2(K.id2(p), beta) == b for p, b in zip(projections, family))
                        ]
                        checks.append((f"two-dim@{E}", len(mediators) == 1, ",".join(family)))
                        if len(mediators) == 1:
                            for name, fam in omega_primes.items():
                                if all(b in fam.members for b in family):
                                    ok = mediators[0] in fam.members
                                    compatibility[name] = compatibility.get(name, True) and ok
    elif kind in ("inserter", "iso-inserter"):
        f, g = data["f"], data["g"]
        L, p, lam = candidate["vertex"], candidate["p"], candidate["lam"]
        B = K.one_cell_hom[f][0]
        fp, gp = K.hcomp1(f, p), K.hcomp1(g, p)
        typed = (K.one_cell_hom.get(p) == (L, B) and lam in K.two_cell_hom
                 and (K.src2(lam), K.tgt2(lam)) == (fp, gp))
        checks.append(("candidate-typing", typed, lam))
        if kind == "iso-inserter":
            checks.append(("lambda-invertible", K.is_invertible_2(lam), lam))
        if typed:
            for E in sorted(K.objects):
                for q in sorted(K.homs[(E, B)].objects):
                    mus = sorted(K.two_cells_between(K.hcomp1(f, q), K.hcomp1(g, q)))
                    if kind == "iso-inserter":
                        mus = [mu for mu in mus if K.is_invertible_2(mu)]
                    for mu in mus:
                        mediators = [
                            h for h in K.homs[(E, L)].objects
                            if K.hcomp1(p, h) == q and K.hcomp2(lam, K.id2(h)) == mu
                        ]
                        checks.append((f"one-dim@{E}", len(mediators) == 1, f"{q};{mu}"))
            for E in sorted(K.objects):
                hom = K.homs[(E, L)]
                for h in hom.objects:
                    for k in hom.objects:
                        for beta in sorted(K.two_cells_between(K.hcomp1(p, h), K.hcomp1(p, k))):
                            lhs = K.vcomp(K.hcomp2(lam, K.id2(k)), K.hcomp2(K.id2(f), beta))
                            rhs = K.vcomp(K.hcomp2(K.id2(g), beta), K.hcomp2(lam, K.id2(h)))
                            if lhs != rhs:
                                continue
                            mediators = [
                                alpha for alpha in hom.morphisms
                                if hom.source[alpha] == h and hom.target[alpha] == k
                                and K.hcomp2(K.id2(p), alpha) == beta
                            ]
                            checks.append((f"two-dim@{E}", len(mediators) == 1, beta))
                            if len(mediators) == 1:
                                for name, fam in omega_primes.items():
                                    if beta in fam.members:
                                        ok = mediators[0] in fam.members
                                        compatibility[name] = compatibility.get(name, True) and ok
    elif kind == "equifier":
        alpha, beta = data["alpha"], data["beta"]
        L, p = candidate["vertex"], candidate["p"]
        f = K.src2(alpha)
        B = K.one_cell_hom[f][0]
        typed = K.one_cell_hom.get(p) == (L, B)
        equifies = typed and K.hcomp2(alpha, K.id2(p)) == K.hcomp2(beta, K.id2(p))
        checks.append(("candidate-equifies", bool(equifies), p))
        if equifies:
            for E in sorted(K.objects):
                for q in sorted(K.homs[(E, B)].objects):
                    if K.hcomp2(alpha, K.id2(q)) != K.hcomp2(beta, K.id2(q)):
                        continue
                    mediators = [h for h in K.homs[(E, L)].objects if K.hcomp1(p, h) == q]
                    checks.append((f"one-dim@{E}", len(mediators) == 1, q))
            for E in sorted(K.objects):
                hom = K.homs[(E, L)]
                for h in hom.objects:
                    for k in hom.objects:
                        for mu in sorted(K.two_cells_between(K.hcomp1(p, h), K.hcomp1(p, k))):
                            mediators = [
                                lam for lam in hom.morphisms
                                if hom.source[lam] == h and hom.target[lam] == k
                                and K.hcomp2(K.id2(p), lam) == mu
                            ]
                            checks.append((f"two-dim@{E}", len(mediators) == 1, mu))
                            if len(mediators) == 1:
                                for name, fam in omega_primes.items():
                                    if mu in fam.members:
                                        ok = mediators[0] in fam.members
                                        compatibility[name] = compatibility.get(name, True) and ok
    else:
        raise TwoCheckError(f"unknown special limit kind {kind!r}")
    for name in omega_primes:
        compatibility.setdefault(name, True)
    return SpecialLimitReport(kind, K, dict(data), dict(candidate), checks, compatibility)


def find_special_limit(K, kind, data, omega_primes=None):
    """Exhaustively search candidates for a special limit; first hit wins."""
    for L in sorted(K.objects):
        if kind == "product":
            objects = list(data["objects"])
            for ps in itertools.product(*(sorted(K.homs[(L, A)].objects) for A in objects)):
                report = special_limit_check(K, kind, data, {"vertex": L, "projections": list(ps)},
                                             omega_primes)
                if report.ok:
                    return report
        elif kind in ("inserter", "iso-inserter"):
            f, g = data["f"], data["g"]
            B = K.one_cell_hom[f][0]
            for p in sorted(K.homs[(L, B)].objects):
                for lam in sorted(K.two_cells_between(K.hcomp1(f, p), K.hcomp1(g, p))):
                    report = special_limit_check(K, kind, data, {"vertex": L, "p": p, "lam": lam},
                                                 omega_primes)
                    if report.ok:
                        return report
        elif kind == "equifier":
            alpha = data["alpha"]
            B = K.one_cell_hom[K.src2(alpha)][0]
            for p in sorted(K.homs[(L, B)].objects):
                report = special_limit_check(K, kind, data, {"vertex": L, "p": p}, omega_primes)
                if report.ok:
                    return report
    return None

"""Finite categories, functors and natural transformations as explicit tables.

Composition is applicative throughout: ``composition[(g, f)]`` is the
composite "f then g", written g.f in the DSL.  All values are immutable
after validation; every operation here is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    BadIdentity,
    MissingComposite,
    NonAssociative,
    ResourceBound,
    TwoCheckError,
    raise_first,
)

DEFAULT_BUDGET = 10_000


def guard_budget(count, what, budget=None):
    limit = DEFAULT_BUDGET if budget is None else budget
    if count > limit:
        raise ResourceBound(f"{what} needs {count} cells, budget is {limit}", count=count, budget=limit)


@dataclass(frozen=True, eq=False)
class FinCategory:
    name: str
    objects: tuple
    morphisms: tuple
    source: Mapping
    target: Mapping
    identity: Mapping
    composition: Mapping

    def compose(self, g, f):
        return self.composition[(g, f)]

    def hom(self, x, y):
        return tuple(m for m in self.morphisms if self.source[m] == x and self.target[m] == y)

    def composable_pairs(self):
        for g in self.morphisms:
            for f in self.morphisms:
                if self.target[f] == self.source[g]:
                    yield g, f

    def is_identity(self, m):
        return m == self.identity[self.source[m]] and self.source[m] == self.target[m]

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.name == other.name
            and self.objects == other.objects
            and set(self.morphisms) == set(other.morphisms)
            and dict(self.source) == dict(other.source)
            and dict(self.target) == dict(other.target)
            and dict(self.identity) == dict(other.identity)
            and dict(self.composition) == dict(other.composition)
        )

    def __repr__(self):
        return f"FinCategory({self.name!r}, {len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def validate_category(name, objects, morphisms, source, target, identity, composition, budget=None):
    """Check the category laws on explicit tables.

    Returns a validated FinCategory or raises the first violated law with
    its witnessing cells (all violations on ``.all``).
    """
    objects = tuple(objects)
    morphisms = tuple(morphisms)
    guard_budget(len(morphisms), f"category {name}", budget)
    violations = []
    if len(set(objects)) != len(objects) or len(set(morphisms)) != len(morphisms):
        violations.append(BadIdentity(f"{name}: duplicate identifiers"))
    if set(objects) & set(morphisms):
        violations.append(BadIdentity(f"{name}: object/morphism identifier clash",
                                      clash=sorted(set(objects) & set(morphisms))))
    for m in morphisms:
        if source.get(m) not in objects or target.get(m) not in objects:
            violations.append(BadIdentity(f"{name}: morphism with bad endpoints", morphism=m))
    raise_first(violations)

    for x in objects:
        i = identity.get(x)
        if i not in morphisms or source[i] != x or target[i] != x:
            violations.append(BadIdentity(f"{name}: identity of {x} is not an endomorphism of {x}",
                                          object=x, identity=i))
    raise_first(violations)

    for g in morphisms:
        for f in morphisms:
            defined = (g, f) in composition
            composable = target[f] == source[g]
            if composable and not defined:
                violations.append(MissingComposite(f"{name}: composite undefined", g=g, f=f))
            elif defined and not composable:
                violations.append(BadIdentity(f"{name}: composition table entry for non-composable pair", g=g, f=f))
            elif defined:
                h = composition[(g, f)]
                if h not in morphisms or source[h] != source[f] or target[h] != target[g]:
                    violations.append(BadIdentity(f"{name}: composite has wrong endpoints", g=g, f=f, composite=h))
    raise_first(violations)

    for f in morphisms:
        if composition[(identity[target[f]], f)] != f:
            violations.append(BadIdentity(f"{name}: left unit law fails", f=f))
        if composition[(f, identity[source[f]])] != f:
            violations.append(BadIdentity(f"{name}: right unit law fails", f=f))
    for h in morphisms:
        for g in morphisms:
            if source[h] != target[g]:
                continue
            hg = composition[(h, g)]
            for f in morphisms:
                if source[g] != target[f]:
                    continue
                if composition[(hg, f)] != composition[(h, composition[(g, f)])]:
                    violations.append(NonAssociative(f"{name}: associativity fails", h=h, g=g, f=f))
    raise_first(violations)

    return FinCategory(name, objects, morphisms, dict(source), dict(target), dict(identity), dict(composition))


@dataclass(frozen=True, eq=False)
class FinFunctor:
    name: str
    source: FinCategory
    target: FinCategory
    object_map: Mapping
    morphism_map: Mapping

    def on_object(self, x):
        return self.object_map[x]

    def on_morphism(self, m):
        return self.morphism_map[m]

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.object_map) == dict(other.object_map)
            and dict(self.morphism_map) == dict(other.morphism_map)
        )

    def __repr__(self):
        return f"FinFunctor({self.name!r}: {self.source.name} -> {self.target.name})"


def validate_functor(name, source, target, object_map, morphism_map):
    violations = []
    for x in source.objects:
        if object_map.get(x) not in target.objects:
            violations.append(BadIdentity(f"{name}: object not mapped into target", object=x))
    raise_first(violations)
    for m in source.morphisms:
        fm = morphism_map.get(m)
        if fm not in target.morphisms:
            violations.append(BadIdentity(f"{name}: morphism not mapped into target", morphism=m))
            continue
        if target.source[fm] != object_map[source.source[m]] or target.target[fm] != object_map[source.target[m]]:
            violations.append(BadIdentity(f"{name}: endpoints not preserved", morphism=m, image=fm))
    raise_first(violations)
    for x in source.objects:
        if morphism_map[source.identity[x]] != target.identity[object_map[x]]:
            violations.append(BadIdentity(f"{name}: identity not preserved", object=x))
    for g, f in source.composable_pairs():
        if morphism_map[source.compose(g, f)] != target.compose(morphism_map[g], morphism_map[f]):
            violations.append(NonAssociative(f"{name}: composition not preserved", g=g, f=f))
    raise_first(violations)
    return FinFunctor(name, source, target, dict(object_map), dict(morphism_map))


def identity_functor(category):
    return FinFunctor(
        f"id<{category.name}>",
        category,
        category,
        {x: x for x in category.objects},
        {m: m for m in category.morphisms},
    )


def compose_functors(g, f):
    """The composite f-then-g."""
    if f.target != g.source:
        raise TwoCheckError("functors not composable", first=f.name, second=g.name)
    return FinFunctor(
        f"({g.name}.{f.name})",
        f.source,
        g.target,
        {x: g.object_map[f.object_map[x]] for x in f.source.objects},
        {m: g.morphism_map[f.morphism_map[m]] for m in f.source.morphisms},
    )


@dataclass(frozen=True, eq=False)
class NatTransformation:
    source: FinFunctor
    target: FinFunctor
    component: Mapping

    def at(self, x):
        return self.component[x]

    def __eq__(self, other):
        if not isinstance(other, NatTransformation):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.component) == dict(other.component)
        )

    def __repr__(self):
        return f"NatTransformation({self.source.name} => {self.target.name})"


def validate_nat_transformation(source, target, component):
    if source.source is not target.source and source.source != target.source:
        raise TwoCheckError("functors not parallel", source=source.name, target=target.name)
    if source.target != target.target:
        raise TwoCheckError("functors not parallel", source=source.name, target=target.name)
    dom, cod = source.source, source.target
    violations = []
    for x in dom.objects:
        c = component.get(x)
        if c not in cod.morphisms or cod.source[c] != source.object_map[x] or cod.target[c] != target.object_map[x]:
            violations.append(BadIdentity("component has wrong endpoints", object=x, component=c))
    raise_first(violations)
    for m in dom.morphisms:
        x, y = dom.source[m], dom.target[m]
        left = cod.compose(component[y], source.morphism_map[m])
        right = cod.compose(target.morphism_map[m], component[x])
        if left != right:
            violations.append(BadIdentity("naturality square fails", morphism=m))
    raise_first(violations)
    return NatTransformation(source, target, dict(component))


def identity_nat(functor):
    return NatTransformation(
        functor, functor, {x: functor.target.identity[functor.object_map[x]] for x in functor.source.objects}
    )


def vcomp_nats(beta, alpha):
    """Vertical composite: alpha then beta."""
    if alpha.target != beta.source:
        raise TwoCheckError("natural transformations not vertically composable")
    cod = alpha.source.target
    return NatTransformation(
        alpha.source,
        beta.target,
        {x: cod.compose(beta.component[x], alpha.component[x]) for x in alpha.source.source.objects},
    )


def hcomp_nats(beta, alpha):
    """Horizontal composite of alpha: F=>F' (A->B) with beta: G=>G' (B->C)."""
    cod = beta.source.target
    comp = {}
    for x in alpha.source.source.objects:
        comp[x] = cod.compose(beta.component[alpha.target.object_map[x]],
                              beta.source.morphism_map[alpha.component[x]])
    return NatTransformation(
        compose_functors(beta.source, alpha.source),
        compose_functors(beta.target, alpha.target),
        comp,
    )


def enumerate_functors(source, target, budget=None):
    """All functors source -> target, in canonical order."""
    objects = list(source.objects)
    results = []
    object_choices = itertools.product(*(sorted(target.objects) for _ in objects))
    for obj_images in object_choices:
        object_map = dict(zip(objects, obj_images))
        domains = []
        nonid = [m for m in source.morphisms if not source.is_identity(m)]
        ok = True
        for m in nonid:
            cands = [c for c in target.morphisms
                     if target.source[c] == object_map[source.source[m]]
                     and target.target[c] == object_map[source.target[m]]]
            if not cands:
                ok = False
                break
            domains.append(sorted(cands))
        if not ok:
            continue
        for images in itertools.product(*domains):
            morphism_map = {m: im for m, im in zip(nonid, images)}
            for x in objects:
                morphism_map[source.identity[x]] = target.identity[object_map[x]]
            good = True
            for g, f in source.composable_pairs():
                if target.compose(morphism_map[g], morphism_map[f]) != morphism_map[source.compose(g, f)]:
                    good = False
                    break
            if good:
                results.append(FinFunctor(f"F{len(results)}", source, target, object_map, morphism_map))
                guard_budget(len(results), f"functors {source.name}->{target.name}", budget)
    return results


def enumerate_nat_transformations(source, target):
    """All natural transformations between two parallel functors."""
    dom, cod = source.source, source.target
    results = []
    choices = []
    for x in dom.objects:
        cands = [m for m in cod.morphisms
                 if cod.source[m] == source.object_map[x] and cod.target[m] == target.object_map[x]]
        if not cands:
            return []
        choices.append(sorted(cands))
    for assignment in itertools.product(*choices):
        component = dict(zip(dom.objects, assignment))
        natural = True
        for m in dom.morphisms:
            x, y = dom.source[m], dom.target[m]
            if cod.compose(component[y], source.morphism_map[m]) != cod.compose(target.morphism_map[m], component[x]):
                natural = False
                break
        if natural:
            results.append(NatTransformation(source, target, component))
    return results


@dataclass(frozen=True)
class FunctorCategory:
    category: FinCategory
    functor_of: Mapping
    transformation_of: Mapping


def functor_category(source, target, budget=None):
    """The category of all functors source -> target and all natural
    transformations between them, composed componentwise."""
    functors = enumerate_functors(source, target, budget=budget)
    functor_ids = {}
    functor_of = {}
    for i, f in enumerate(functors):
        fid = f"F{i}"
        functor_ids[_functor_key(f)] = fid
        functor_of[fid] = FinFunctor(fid, f.source, f.target, f.object_map, f.morphism_map)

    morphisms = []
    transformation_of = {}
    src_map, tgt_map = {}, {}
    identity = {}
    by_components = {}
    for fid in sorted(functor_of):
        for gid in sorted(functor_of):
            for nat in enumerate_nat_transformations(functor_of[fid], functor_of[gid]):
                nid = f"n{len(morphisms)}"
                morphisms.append(nid)
                guard_budget(len(morphisms), f"functor_category({source.name},{target.name})", budget)
                transformation_of[nid] = nat
                src_map[nid] = fid
                tgt_map[nid] = gid
                key = (fid, gid, tuple(sorted(nat.component.items())))
                by_components[key] = nid
                if fid == gid and all(target.is_identity(c) for c in nat.component.values()):
                    identity[fid] = nid

    composition = {}
    for g in morphisms:
        for f in morphisms:
            if tgt_map[f] != src_map[g]:
                continue
            comp = vcomp_nats(transformation_of[g], transformation_of[f])
            key = (src_map[f], tgt_map[g], tuple(sorted(comp.component.items())))
            composition[(g, f)] = by_components[key]

    cat = validate_category(
        f"[{source.name},{target.name}]",
        sorted(functor_of),
        morphisms,
        src_map,
        tgt_map,
        identity,
        composition,
        budget=budget,
    )
    return FunctorCategory(cat, functor_of, transformation_of)


def _functor_key(f):
    return (tuple(sorted(f.object_map.items())), tuple(sorted(f.morphism_map.items())))


def is_isomorphism_of_categories(functor):
    """True iff the functor is bijective on objects and on morphisms."""
    obj_images = set(functor.object_map.values())
    mor_images = set(functor.morphism_map.values())
    return (
        len(obj_images) == len(functor.source.objects) == len(functor.target.objects)
        and len(mor_images) == len(functor.source.morphisms) == len(functor.target.morphisms)
    )


@dataclass(frozen=True)
class ProductCategory:
    category: FinCategory
    proj1: FinFunctor
    proj2: FinFunctor
    object_pair: Mapping
    morphism_pair: Mapping


def pair_id(a, b):
    return f"({a},{b})"


def product_category(left, right, budget=None):
    """The product category with its two projections."""
    guard_budget(len(left.morphisms) * len(right.morphisms), f"product({left.name},{right.name})", budget)
    objects = [pair_id(a, b) for a in left.objects for b in right.objects]
    object_pair = {pair_id(a, b): (a, b) for a in left.objects for b in right.objects}
    morphisms = [pair_id(m, n) for m in left.morphisms for n in right.morphisms]
    morphism_pair = {pair_id(m, n): (m, n) for m in left.morphisms for n in right.morphisms}
    source = {pid: pair_id(left.source[m], right.source[n]) for pid, (m, n) in morphism_pair.items()}
    target = {pid: pair_id(left.target[m], right.target[n]) for pid, (m, n) in morphism_pair.items()}
    identity = {pair_id(a, b): pair_id(left.identity[a], right.identity[b]) for a in left.objects for b in right.objects}
    composition = {}
    for gid, (g1, g2) in morphism_pair.items():
        for fid, (f1, f2) in morphism_pair.items():
            if left.target[f1] == left.source[g1] and right.target[f2] == right.source[g2]:
                composition[(gid, fid)] = pair_id(left.compose(g1, f1), right.compose(g2, f2))
    cat = validate_category(
        f"({left.name}x{right.name})", objects, morphisms, source, target, identity, composition, budget=budget
    )
    proj1 = FinFunctor("proj1", cat, left, {o: object_pair[o][0] for o in objects},
                       {m: morphism_pair[m][0] for m in morphisms})
    proj2 = FinFunctor("proj2", cat, right, {o: object_pair[o][1] for o in objects},
                       {m: morphism_pair[m][1] for m in morphisms})
    return ProductCategory(cat, proj1, proj2, object_pair, morphism_pair)


def opposite_category(category):
    """Reverse all morphisms; involutive on the nose including the name."""
    name = category.name[3:-1] if category.name.startswith("op(") and category.name.endswith(")") else f"op({category.name})"
    return FinCategory(
        name,
        category.objects,
        category.morphisms,
        dict(category.target),
        dict(category.source),
        dict(category.identity),
        {(g, f): category.composition[(f, g)] for (f, g) in category.composition},
    )


def find_two_sided_inverse(functor):
    """Brute-force search for a two-sided inverse functor; None if absent."""
    for obj_images in itertools.product(*(sorted(functor.source.objects) for _ in functor.target.objects)):
        object_map = dict(zip(functor.target.objects, obj_images))
        if any(functor.object_map[object_map[y]] != y for y in functor.target.objects):
            continue
        if any(object_map[functor.object_map[x]] != x for x in functor.source.objects):
            continue
        choices = []
        ok = True
        for m in functor.target.morphisms:
            cands = [n for n in functor.source.morphisms if functor.morphism_map[n] == m
                     and functor.source.source[n] == object_map[functor.target.source[m]]
                     and functor.source.target[n] == object_map[functor.target.target[m]]]
            if not cands:
                ok = False
                break
            choices.append((m, sorted(cands)))
        if not ok:
            continue
        for assignment in itertools.product(*(c for _, c in choices)):
            morphism_map = {m: n for (m, _), n in zip(choices, assignment)}
            if any(morphism_map[functor.morphism_map[n]] != n for n in functor.source.morphisms):
                continue
            try:
                return validate_functor("inverse", functor.target, functor.source, object_map, morphism_map)
            except TwoCheckError:
                continue
    return None

"""Finite strict 2-categories, 2-functors, cell families, labels, co-duals.

A TwoCategory stores one hom FinCategory per ordered object pair (objects of
the hom = 1-cells, morphisms = 2-cells, composition = vertical composition)
plus horizontal composition tables for 1-cells and 2-cells.  All 1-cell ids
and all 2-cell ids are globally unique, so families and functor maps can be
keyed by bare identifiers.

Whiskering is not stored; it is horizontal composition with an identity
2-cell.  Invertibility of 2-cells (vertical two-sided inverse) is decided by
table search during validation and cached on the value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import singledispatch
from typing import Mapping

from . import fincat
from .errors import (
    BadIdentity,
    HostMismatch,
    InterchangeViolation,
    MissingIdentity,
    NonAssociativeHComp,
    NotClosedUnderComposition,
    TwoCheckError,
    raise_first,
)
from .fincat import FinCategory, FinFunctor, guard_budget, validate_category


@dataclass(frozen=True, eq=False)
class TwoCategory:
    name: str
    objects: tuple
    homs: Mapping           # (A, B) -> FinCategory
    identity_1: Mapping     # object -> 1-cell
    hcomp1_table: Mapping   # (g, f) -> g.f  on 1-cells
    hcomp2_table: Mapping   # (beta, alpha) -> beta.alpha  on 2-cells
    one_cell_hom: Mapping   # 1-cell -> (A, B)
    two_cell_hom: Mapping   # 2-cell -> (A, B)
    invertible_two_cells: frozenset

    # -- lookups ------------------------------------------------------------
    def hom(self, a, b):
        return self.homs[(a, b)]

    @property
    def one_cells(self):
        return tuple(f for pair in self._pairs() for f in self.homs[pair].objects)

    @property
    def two_cells(self):
        return tuple(m for pair in self._pairs() for m in self.homs[pair].morphisms)

    def _pairs(self):
        return [(a, b) for a in self.objects for b in self.objects]

    def src1(self, f):
        return self.one_cell_hom[f][0]

    def tgt1(self, f):
        return self.one_cell_hom[f][1]

    def src2(self, alpha):
        return self.homs[self.two_cell_hom[alpha]].source[alpha]

    def tgt2(self, alpha):
        return self.homs[self.two_cell_hom[alpha]].target[alpha]

    def id1(self, obj):
        return self.identity_1[obj]

    def id2(self, f):
        return self.homs[self.one_cell_hom[f]].identity[f]

    def vcomp(self, beta, alpha):
        """Vertical composite: alpha then beta."""
        hom = self.homs[self.two_cell_hom[alpha]]
        return hom.compose(beta, alpha)

    def hcomp1(self, g, f):
        return self.hcomp1_table[(g, f)]

    def hcomp2(self, beta, alpha):
        """Horizontal composite: alpha (left leg) then beta (right leg)."""
        return self.hcomp2_table[(beta, alpha)]

    def whisker_post(self, g, alpha):
        """g . alpha for a 1-cell g out of alpha's target object."""
        return self.hcomp2(self.id2(g), alpha)

    def whisker_pre(self, alpha, f):
        """alpha . f for a 1-cell f into alpha's source object."""
        return self.hcomp2(alpha, self.id2(f))

    def two_cells_between(self, f, g):
        if self.one_cell_hom[f] != self.one_cell_hom[g]:
            return ()
        hom = self.homs[self.one_cell_hom[f]]
        return tuple(m for m in hom.morphisms if hom.source[m] == f and hom.target[m] == g)

    def is_invertible_2(self, alpha):
        return alpha in self.invertible_two_cells

    def vertical_inverse(self, alpha):
        hom = self.homs[self.two_cell_hom[alpha]]
        f, g = hom.source[alpha], hom.target[alpha]
        for beta in self.two_cells_between(g, f):
            if hom.compose(beta, alpha) == hom.identity[f] and hom.compose(alpha, beta) == hom.identity[g]:
                return beta
        return None

    def __eq__(self, other):
        if not isinstance(other, TwoCategory):
            return NotImplemented
        return (
            self.name == other.name
            and self.objects == other.objects
            and {p: self.homs[p] for p in self._pairs()} == {p: other.homs.get(p) for p in other._pairs()}
            and dict(self.identity_1) == dict(other.identity_1)
            and dict(self.hcomp1_table) == dict(other.hcomp1_table)
            and dict(self.hcomp2_table) == dict(other.hcomp2_table)
        )

    def __repr__(self):
        return (f"TwoCategory({self.name!r}, {len(self.objects)} objects, "
                f"{len(self.one_cells)} 1-cells, {len(self.two_cells)} 2-cells)")


def validate_two_category(name, objects, homs, identity_1, hcomp1, hcomp2, budget=None):
    """Validate all strict 2-category laws on explicit tables.

    ``homs`` maps (A, B) to a FinCategory (or to the raw table dict accepted
    by validate_category).  The hom categories carry the vertical laws; this
    function checks global uniqueness, horizontal unit/associativity on both
    levels, and functoriality of horizontal composition (interchange and
    identity preservation), which is what makes each horizontal composition
    map a functor on the product of hom categories.
    """
    objects = tuple(objects)
    violations = []
    validated_homs = {}
    for a in objects:
        for b in objects:
            raw = homs.get((a, b))
            if raw is None:
                raise BadIdentity(f"{name}: missing hom({a},{b})")
            if isinstance(raw, FinCategory):
                validated_homs[(a, b)] = validate_category(
                    raw.name, raw.objects, raw.morphisms, raw.source, raw.target,
                    raw.identity, raw.composition, budget=budget)
            else:
                validated_homs[(a, b)] = validate_category(budget=budget, **raw)

    one_cell_hom, two_cell_hom = {}, {}
    for pair, hom in validated_homs.items():
        for f in hom.objects:
            if f in one_cell_hom:
                violations.append(BadIdentity(f"{name}: duplicate 1-cell id", cell=f))
            one_cell_hom[f] = pair
        for m in hom.morphisms:
            if m in two_cell_hom:
                violations.append(BadIdentity(f"{name}: duplicate 2-cell id", cell=m))
            two_cell_hom[m] = pair
    raise_first(violations)

    for x in objects:
        i = identity_1.get(x)
        if i is None or one_cell_hom.get(i) != (x, x):
            violations.append(BadIdentity(f"{name}: identity 1-cell of {x} missing or misplaced", object=x))
    raise_first(violations)

    total2 = sum(len(h.morphisms) for h in validated_homs.values())
    guard_budget(total2, f"two-category {name}", budget)

    # Horizontal composition of 1-cells: totality, typing, units, associativity.
    for g, pg in one_cell_hom.items():
        for f, pf in one_cell_hom.items():
            composable = pf[1] == pg[0]
            defined = (g, f) in hcomp1
            if composable and not defined:
                violations.append(BadIdentity(f"{name}: horizontal composite of 1-cells undefined", g=g, f=f))
            elif defined and not composable:
                violations.append(BadIdentity(f"{name}: hcomp1 entry for non-composable pair", g=g, f=f))
            elif defined and one_cell_hom.get(hcomp1[(g, f)]) != (pf[0], pg[1]):
                violations.append(BadIdentity(f"{name}: hcomp1 lands wrong", g=g, f=f, composite=hcomp1[(g, f)]))
    raise_first(violations)
    for f, (a, b) in one_cell_hom.items():
        if hcomp1[(identity_1[b], f)] != f or hcomp1[(f, identity_1[a])] != f:
            violations.append(BadIdentity(f"{name}: horizontal unit law fails on 1-cell", cell=f))
    raise_first(violations)
    for h, ph in one_cell_hom.items():
        for g, pg in one_cell_hom.items():
            if pg[1] != ph[0]:
                continue
            hg = hcomp1[(h, g)]
            for f, pf in one_cell_hom.items():
                if pf[1] != pg[0]:
                    continue
                if hcomp1[(hg, f)] != hcomp1[(h, hcomp1[(g, f)])]:
                    violations.append(NonAssociativeHComp(f"{name}: 1-cell hcomp associativity fails", h=h, g=g, f=f))
    raise_first(violations)

    # Horizontal composition of 2-cells: totality first.
    hsrc = {m: validated_homs[p].source[m] for m, p in two_cell_hom.items()}
    htgt = {m: validated_homs[p].target[m] for m, p in two_cell_hom.items()}
    cells_by_pair = {p: tuple(h.morphisms) for p, h in validated_homs.items()}
    for (b, c) in validated_homs:
        for (a, b2) in validated_homs:
            if b2 != b:
                continue
            for beta in cells_by_pair[(b, c)]:
                for alpha in cells_by_pair[(a, b)]:
                    comp = hcomp2.get((beta, alpha))
                    if comp is None or comp not in two_cell_hom:
                        violations.append(BadIdentity(f"{name}: horizontal composite of 2-cells undefined",
                                                      beta=beta, alpha=alpha))
                        raise_first(violations)

    # Identity preservation (part of functoriality): id2(g) . id2(f) = id2(g.f).
    for g, pg in one_cell_hom.items():
        idg = validated_homs[pg].identity[g]
        for f, pf in one_cell_hom.items():
            if pf[1] != pg[0]:
                continue
            idf = validated_homs[pf].identity[f]
            expected = validated_homs[(pf[0], pg[1])].identity[hcomp1[(g, f)]]
            if hcomp2[(idg, idf)] != expected:
                violations.append(InterchangeViolation(f"{name}: id2 not preserved by hcomp", g=g, f=f))
    raise_first(violations)

    # Typing of every composite.
    for (b, c) in validated_homs:
        for (a, b2) in validated_homs:
            if b2 != b:
                continue
            for beta in cells_by_pair[(b, c)]:
                for alpha in cells_by_pair[(a, b)]:
                    comp = hcomp2[(beta, alpha)]
                    if (two_cell_hom.get(comp) != (a, c)
                            or hsrc[comp] != hcomp1[(hsrc[beta], hsrc[alpha])]
                            or htgt[comp] != hcomp1[(htgt[beta], htgt[alpha])]):
                        violations.append(BadIdentity(f"{name}: hcomp2 lands wrong", beta=beta, alpha=alpha,
                                                      composite=comp))
                        raise_first(violations)

    # Horizontal units on 2-cells.
    for pair, hom in validated_homs.items():
        ida, idb = identity_1[pair[0]], identity_1[pair[1]]
        hid_a = validated_homs[(pair[0], pair[0])].identity[ida]
        hid_b = validated_homs[(pair[1], pair[1])].identity[idb]
        for m in hom.morphisms:
            if hcomp2[(hid_b, m)] != m or hcomp2[(m, hid_a)] != m:
                violations.append(BadIdentity(f"{name}: horizontal unit law fails on 2-cell", cell=m))
    raise_first(violations)

    # Interchange: hcomp is functorial on vertical composites.
    vpairs = {}
    for pair, hom in validated_homs.items():
        lst = []
        for beta in hom.morphisms:
            for alpha in hom.morphisms:
                if hom.target[alpha] == hom.source[beta]:
                    lst.append((beta, alpha, hom.compose(beta, alpha)))
        vpairs[pair] = lst
    for (b, c) in validated_homs:
        right = vpairs[(b, c)]
        for (a, b2) in validated_homs:
            if b2 != b:
                continue
            left_hom = validated_homs[(a, c)]
            for beta2, beta1, betav in right:
                for alpha2, alpha1, alphav in vpairs[(a, b)]:
                    lhs = hcomp2[(betav, alphav)]
                    rhs = left_hom.compose(hcomp2[(beta2, alpha2)], hcomp2[(beta1, alpha1)])
                    if lhs != rhs:
                        violations.append(InterchangeViolation(
                            f"{name}: interchange fails",
                            beta2=beta2, beta1=beta1, alpha2=alpha2, alpha1=alpha1))
                        raise_first(violations)

    # Associativity of hcomp2.
    for (c, d) in validated_homs:
        for (b, c2) in validated_homs:
            if c2 != c:
                continue
            for (a, b2) in validated_homs:
                if b2 != b:
                    continue
                for gamma in cells_by_pair[(c, d)]:
                    for beta in cells_by_pair[(b, c)]:
                        gb = hcomp2[(gamma, beta)]
                        for alpha in cells_by_pair[(a, b)]:
                            if hcomp2[(gb, alpha)] != hcomp2[(gamma, hcomp2[(beta, alpha)])]:
                                violations.append(NonAssociativeHComp(
                                    f"{name}: 2-cell hcomp associativity fails",
                                    gamma=gamma, beta=beta, alpha=alpha))
                                raise_first(violations)

    invertible = set()
    for pair, hom in validated_homs.items():
        for alpha in hom.morphisms:
            f, g = hom.source[alpha], hom.target[alpha]
            for beta in hom.morphisms:
                if hom.source[beta] == g and hom.target[beta] == f:
                    if hom.compose(beta, alpha) == hom.identity[f] and hom.compose(alpha, beta) == hom.identity[g]:
                        invertible.add(alpha)
                        break

    return TwoCategory(
        name, objects, validated_homs, dict(identity_1), dict(hcomp1), dict(hcomp2),
        one_cell_hom, two_cell_hom, frozenset(invertible),
    )


def hcomp_functor(K, a, b, c, budget=None):
    """The horizontal-composition functor hom(b,c) x hom(a,b) -> hom(a,c).

    Built on the explicit product category; validating it re-expresses the
    interchange law, so tests can assert it directly.
    """
    prod = fincat.product_category(K.hom(b, c), K.hom(a, b), budget=budget)
    object_map = {o: K.hcomp1(*prod.object_pair[o]) for o in prod.category.objects}
    morphism_map = {m: K.hcomp2(*prod.morphism_pair[m]) for m in prod.category.morphisms}
    return fincat.validate_functor(
        f"hcomp<{a},{b},{c}>", prod.category, K.hom(a, c), object_map, morphism_map,
    )


# ---------------------------------------------------------------------------
# 2-functors


@dataclass(frozen=True, eq=False)
class TwoFunctor:
    name: str
    source: TwoCategory
    target: TwoCategory
    object_map: Mapping
    one_map: Mapping
    two_map: Mapping

    def on_object(self, x):
        return self.object_map[x]

    def on_one(self, f):
        return self.one_map[f]

    def on_two(self, alpha):
        return self.two_map[alpha]

    def __eq__(self, other):
        if not isinstance(other, TwoFunctor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.object_map) == dict(other.object_map)
            and dict(self.one_map) == dict(other.one_map)
            and dict(self.two_map) == dict(other.two_map)
        )

    def __repr__(self):
        return f"TwoFunctor({self.name!r}: {self.source.name} -> {self.target.name})"


def validate_two_functor(name, source, target, object_map, one_map, two_map):
    violations = []
    for x in source.objects:
        if object_map.get(x) not in target.objects:
            violations.append(BadIdentity(f"{name}: object not mapped", object=x))
    raise_first(violations)
    for f in source.one_cells:
        ff = one_map.get(f)
        a, b = source.one_cell_hom[f]
        if ff is None or target.one_cell_hom.get(ff) != (object_map[a], object_map[b]):
            violations.append(BadIdentity(f"{name}: 1-cell endpoints not preserved", cell=f, image=ff))
    raise_first(violations)
    for alpha in source.two_cells:
        fa = two_map.get(alpha)
        if fa is None or fa not in target.two_cell_hom:
            violations.append(BadIdentity(f"{name}: 2-cell not mapped", cell=alpha))
            continue
        if target.src2(fa) != one_map[source.src2(alpha)] or target.tgt2(fa) != one_map[source.tgt2(alpha)]:
            violations.append(BadIdentity(f"{name}: 2-cell endpoints not preserved", cell=alpha, image=fa))
    raise_first(violations)
    for x in source.objects:
        if one_map[source.id1(x)] != target.id1(object_map[x]):
            violations.append(BadIdentity(f"{name}: identity 1-cell not preserved", object=x))
    for f in source.one_cells:
        if two_map[source.id2(f)] != target.id2(one_map[f]):
            violations.append(BadIdentity(f"{name}: identity 2-cell not preserved", cell=f))
    raise_first(violations)
    for g in source.one_cells:
        for f in source.one_cells:
            if source.tgt1(f) != source.src1(g):
                continue
            if one_map[source.hcomp1(g, f)] != target.hcomp1(one_map[g], one_map[f]):
                violations.append(BadIdentity(f"{name}: 1-cell composition not preserved", g=g, f=f))
    raise_first(violations)
    for pair in source._pairs():
        hom = source.homs[pair]
        for beta in hom.morphisms:
            for alpha in hom.morphisms:
                if hom.target[alpha] != hom.source[beta]:
                    continue
                if two_map[hom.compose(beta, alpha)] != target.vcomp(two_map[beta], two_map[alpha]):
                    violations.append(BadIdentity(f"{name}: vertical composition not preserved",
                                                  beta=beta, alpha=alpha))
                    raise_first(violations)
    for beta in source.two_cells:
        for alpha in source.two_cells:
            if source.two_cell_hom[alpha][1] != source.two_cell_hom[beta][0]:
                continue
            if two_map[source.hcomp2(beta, alpha)] != target.hcomp2(two_map[beta], two_map[alpha]):
                violations.append(BadIdentity(f"{name}: horizontal composition not preserved",
                                              beta=beta, alpha=alpha))
                raise_first(violations)
    return TwoFunctor(name, source, target, dict(object_map), dict(one_map), dict(two_map))


def identity_two_functor(K):
    return TwoFunctor(
        f"id<{K.name}>", K, K,
        {x: x for x in K.objects},
        {f: f for f in K.one_cells},
        {m: m for m in K.two_cells},
    )


def compose_two_functors(g, f):
    if f.target != g.source:
        raise TwoCheckError("2-functors not composable", first=f.name, second=g.name)
    return TwoFunctor(
        f"({g.name}.{f.name})", f.source, g.target,
        {x: g.object_map[f.object_map[x]] for x in f.source.objects},
        {c: g.one_map[f.one_map[c]] for c in f.source.one_cells},
        {m: g.two_map[f.two_map[m]] for m in f.source.two_cells},
    )


def constant_two_functor(shape, K, obj):
    """The 2-functor constant at an object."""
    i1, i2 = K.id1(obj), K.id2(K.id1(obj))
    return TwoFunctor(
        f"const<{obj}>", shape, K,
        {x: obj for x in shape.objects},
        {f: i1 for f in shape.one_cells},
        {m: i2 for m in shape.two_cells},
    )


def enumerate_two_functors(source, target, budget=None):
    """All 2-functors source -> target, canonical order, by backtracking."""
    results = []
    nonid1 = [f for f in source.one_cells if not _is_identity_one(source, f)]
    hpairs = [(g, f) for g in source.one_cells for f in source.one_cells
              if source.tgt1(f) == source.src1(g)]

    for obj_images in itertools.product(*(sorted(target.objects) for _ in source.objects)):
        object_map = dict(zip(source.objects, obj_images))
        one_map = {source.id1(x): target.id1(object_map[x]) for x in source.objects}

        def assign_one(idx):
            if idx == len(nonid1):
                for g, f in hpairs:
                    if one_map[source.hcomp1(g, f)] != target.hcomp1(one_map[g], one_map[f]):
                        return
                yield dict(one_map)
                return
            cell = nonid1[idx]
            a, b = source.one_cell_hom[cell]
            want = (object_map[a], object_map[b])
            for cand in target.homs[want].objects:
                one_map[cell] = cand
                ok = True
                for g, f in hpairs:
                    if g in one_map and f in one_map:
                        gf = source.hcomp1(g, f)
                        if gf in one_map and one_map[gf] != target.hcomp1(one_map[g], one_map[f]):
                            ok = False
                            break
                if ok:
                    yield from assign_one(idx + 1)
                del one_map[cell]

        for complete_one in assign_one(0):
            nonid2 = [m for m in source.two_cells if not _is_identity_two(source, m)]
            two_map = {source.id2(f): target.id2(complete_one[f]) for f in source.one_cells}

            def assign_two(idx):
                if idx == len(nonid2):
                    try:
                        validated = validate_two_functor(
                            f"F{len(results)}", source, target, object_map, complete_one, dict(two_map))
                    except TwoCheckError:
                        return
                    results.append(validated)
                    guard_budget(len(results), f"2-functors {source.name}->{target.name}", budget)
                    return
                m = nonid2[idx]
                fs, ft = source.src2(m), source.tgt2(m)
                for cand in target.two_cells_between(complete_one[fs], complete_one[ft]):
                    two_map[m] = cand
                    assign_two(idx + 1)
                    del two_map[m]

            assign_two(0)
    return results


def _is_identity_one(K, f):
    a, b = K.one_cell_hom[f]
    return a == b and f == K.id1(a)


def _is_identity_two(K, m):
    hom = K.homs[K.two_cell_hom[m]]
    return hom.is_identity(m)


# ---------------------------------------------------------------------------
# Cell families and labels


@dataclass(frozen=True, eq=False)
class ArrowFamily:
    host: TwoCategory
    members: frozenset

    def __contains__(self, f):
        return f in self.members

    def __eq__(self, other):
        if not isinstance(other, ArrowFamily):
            return NotImplemented
        return self.host == other.host and self.members == other.members

    def __repr__(self):
        return f"ArrowFamily({self.host.name}, {sorted(self.members)})"


@dataclass(frozen=True, eq=False)
class CellFamily:
    host: TwoCategory
    members: frozenset

    def __contains__(self, alpha):
        return alpha in self.members

    def __eq__(self, other):
        if not isinstance(other, CellFamily):
            return NotImplemented
        return self.host == other.host and self.members == other.members

    def __repr__(self):
        return f"CellFamily({self.host.name}, {len(self.members)} cells)"


def validate_arrow_family(K, subset):
    members = frozenset(subset)
    violations = []
    for f in members:
        if f not in K.one_cell_hom:
            violations.append(MissingIdentity(f"{K.name}: not a 1-cell", cell=f))
    raise_first(violations)
    for x in K.objects:
        if K.id1(x) not in members:
            violations.append(MissingIdentity(f"{K.name}: family misses identity 1-cell", object=x))
    raise_first(violations)
    for g in members:
        for f in members:
            if K.tgt1(f) == K.src1(g) and K.hcomp1(g, f) not in members:
                violations.append(NotClosedUnderComposition(
                    f"{K.name}: arrow family not closed", g=g, f=f, composite=K.hcomp1(g, f)))
    raise_first(violations)
    return ArrowFamily(K, members)


def validate_cell_family(K, subset):
    members = frozenset(subset)
    violations = []
    for m in members:
        if m not in K.two_cell_hom:
            violations.append(MissingIdentity(f"{K.name}: not a 2-cell", cell=m))
    raise_first(violations)
    for f in K.one_cells:
        if K.id2(f) not in members:
            violations.append(MissingIdentity(f"{K.name}: family misses identity 2-cell", cell=f))
    raise_first(violations)
    for beta in members:
        for alpha in members:
            if K.two_cell_hom[alpha] == K.two_cell_hom[beta] and K.tgt2(alpha) == K.src2(beta):
                if K.vcomp(beta, alpha) not in members:
                    violations.append(NotClosedUnderComposition(
                        f"{K.name}: family not closed under vertical composition", beta=beta, alpha=alpha))
            if K.two_cell_hom[alpha][1] == K.two_cell_hom[beta][0]:
                if K.hcomp2(beta, alpha) not in members:
                    violations.append(NotClosedUnderComposition(
                        f"{K.name}: family not closed under horizontal composition", beta=beta, alpha=alpha))
    raise_first(violations)
    return CellFamily(K, members)


def generated_cell_family(K, seed):
    """The least valid cell family containing the seed cells."""
    members = {K.id2(f) for f in K.one_cells} | set(seed)
    changed = True
    while changed:
        changed = False
        current = list(members)
        for beta in current:
            for alpha in current:
                if K.two_cell_hom[alpha] == K.two_cell_hom[beta] and K.tgt2(alpha) == K.src2(beta):
                    v = K.vcomp(beta, alpha)
                    if v not in members:
                        members.add(v)
                        changed = True
                if K.two_cell_hom[alpha][1] == K.two_cell_hom[beta][0]:
                    h = K.hcomp2(beta, alpha)
                    if h not in members:
                        members.add(h)
                        changed = True
    return validate_cell_family(K, members)


def all_arrows_family(K):
    return validate_arrow_family(K, K.one_cells)


def identity_arrows_family(K):
    return validate_arrow_family(K, [K.id1(x) for x in K.objects])


def omega_s(K):
    return validate_cell_family(K, [K.id2(f) for f in K.one_cells])


def omega_p(K):
    return validate_cell_family(K, K.invertible_two_cells)


def omega_l(K):
    return validate_cell_family(K, K.two_cells)


def canonical_families(K, tag):
    """(Sigma, Omega) for the canonical labels: s, p, l."""
    if tag == "s":
        return all_arrows_family(K), omega_s(K)
    if tag == "p":
        return all_arrows_family(K), omega_p(K)
    if tag == "l":
        return identity_arrows_family(K), omega_l(K)
    raise TwoCheckError(f"unknown canonical tag {tag!r}")


def canonical_omegas(K):
    return {"s": omega_s(K), "p": omega_p(K), "l": omega_l(K)}


@dataclass(frozen=True)
class Label:
    sigma: ArrowFamily
    omega: CellFamily


class LabelOrder(Enum):
    LE = "<="
    GE = ">="
    EQ = "="
    INCOMPARABLE = "incomparable"


def compare_labels(left, right):
    """Partial order on labels: smaller = stricter (more arrows, fewer cells)."""
    if left.sigma.host != right.sigma.host or left.omega.host != right.omega.host:
        raise HostMismatch("labels live on different hosts")
    le = right.sigma.members <= left.sigma.members and left.omega.members <= right.omega.members
    ge = left.sigma.members <= right.sigma.members and right.omega.members <= left.omega.members
    if le and ge:
        return LabelOrder.EQ
    if le:
        return LabelOrder.LE
    if ge:
        return LabelOrder.GE
    return LabelOrder.INCOMPARABLE


# ---------------------------------------------------------------------------
# co-duality


def _co_name(name):
    if name.startswith("co(") and name.endswith(")"):
        return name[3:-1]
    return f"co({name})"


@singledispatch
def co_dual(x):
    raise TwoCheckError(f"no co-dual for {type(x).__name__}")


@co_dual.register
def _(K: TwoCategory):
    homs = {pair: fincat.opposite_category(hom) for pair, hom in K.homs.items()}
    return TwoCategory(
        _co_name(K.name),
        K.objects,
        homs,
        dict(K.identity_1),
        dict(K.hcomp1_table),
        dict(K.hcomp2_table),
        dict(K.one_cell_hom),
        dict(K.two_cell_hom),
        K.invertible_two_cells,
    )


@co_dual.register
def _(F: TwoFunctor):
    return TwoFunctor(
        _co_name(F.name), co_dual(F.source), co_dual(F.target),
        dict(F.object_map), dict(F.one_map), dict(F.two_map),
    )


@co_dual.register
def _(fam: CellFamily):
    return CellFamily(co_dual(fam.host), fam.members)


@co_dual.register
def _(fam: ArrowFamily):
    return ArrowFamily(co_dual(fam.host), fam.members)


def complete_two_functor(name, shape, K, object_map, one_map, two_map):
    """Fill identity cells and forced composites of a partial 2-functor
    assignment, then validate."""
    object_map = dict(object_map)
    one_map = dict(one_map)
    two_map = dict(two_map)
    for x in shape.objects:
        one_map.setdefault(shape.id1(x), K.id1(object_map[x]))
    changed = True
    while changed:
        changed = False
        for g in shape.one_cells:
            for f in shape.one_cells:
                if shape.tgt1(f) != shape.src1(g):
                    continue
                gf = shape.hcomp1(g, f)
                if gf not in one_map and g in one_map and f in one_map:
                    one_map[gf] = K.hcomp1(one_map[g], one_map[f])
                    changed = True
    for f in shape.one_cells:
        if f in one_map:
            two_map.setdefault(shape.id2(f), K.id2(one_map[f]))
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
                        two_map[c] = K.vcomp(two_map[beta], two_map[alpha])
                        changed = True
        for beta in shape.two_cells:
            for alpha in shape.two_cells:
                if shape.two_cell_hom[alpha][1] != shape.two_cell_hom[beta][0]:
                    continue
                c = shape.hcomp2(beta, alpha)
                if c not in two_map and beta in two_map and alpha in two_map:
                    two_map[c] = K.hcomp2(two_map[beta], two_map[alpha])
                    changed = True
    return validate_two_functor(name, shape, K, object_map, one_map, two_map)

"""Cat-valued strict 2-functors given by explicit tables.

These serve both as weights and as diagrams valued in finite categories.
Strict 2-functoriality is checked exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fincat
from .errors import BadIdentity, NonAssociative, raise_first
from .twocat import TwoCategory


@dataclass(frozen=True)
class CatDiagram:
    """A strict 2-functor shape -> Cat_fin."""

    name: str
    shape: TwoCategory
    ob: dict
    arrow: dict
    cell: dict

    def category(self, obj):
        return self.ob[obj]

    def functor(self, one_cell):
        return self.arrow[one_cell]

    def nat(self, two_cell):
        return self.cell[two_cell]


Weight = CatDiagram


def validate_cat_diagram(name, shape, ob, arrow, cell):
    violations = []
    for x in shape.objects:
        if x not in ob:
            violations.append(BadIdentity(f"{name}: object not mapped", object=x))
    raise_first(violations)
    for f in shape.one_cells:
        a, b = shape.one_cell_hom[f]
        F = arrow.get(f)
        if F is None or F.source != ob[a] or F.target != ob[b]:
            violations.append(BadIdentity(f"{name}: 1-cell image has wrong endpoints", cell=f))
    raise_first(violations)
    for x in shape.objects:
        if arrow[shape.id1(x)] != fincat.identity_functor(ob[x]):
            violations.append(BadIdentity(f"{name}: identity 1-cell not sent to identity functor", object=x))
    for g in shape.one_cells:
        for f in shape.one_cells:
            if shape.tgt1(f) != shape.src1(g):
                continue
            if arrow[shape.hcomp1(g, f)] != fincat.compose_functors(arrow[g], arrow[f]):
                violations.append(NonAssociative(f"{name}: composition of 1-cells not preserved", g=g, f=f))
    raise_first(violations)
    for m in shape.two_cells:
        nt = cell.get(m)
        if nt is None or nt.source != arrow[shape.src2(m)] or nt.target != arrow[shape.tgt2(m)]:
            violations.append(BadIdentity(f"{name}: 2-cell image has wrong endpoints", cell=m))
    raise_first(violations)
    for f in shape.one_cells:
        if cell[shape.id2(f)] != fincat.identity_nat(arrow[f]):
            violations.append(BadIdentity(f"{name}: identity 2-cell not preserved", cell=f))
    for pair in [(a, b) for a in shape.objects for b in shape.objects]:
        hom = shape.homs[pair]
        for beta in hom.morphisms:
            for alpha in hom.morphisms:
                if hom.target[alpha] != hom.source[beta]:
                    continue
                if cell[hom.compose(beta, alpha)] != fincat.vcomp_nats(cell[beta], cell[alpha]):
                    violations.append(NonAssociative(f"{name}: vertical composition not preserved",
                                                     beta=beta, alpha=alpha))
    raise_first(violations)
    for beta in shape.two_cells:
        for alpha in shape.two_cells:
            if shape.two_cell_hom[alpha][1] != shape.two_cell_hom[beta][0]:
                continue
            if cell[shape.hcomp2(beta, alpha)] != fincat.hcomp_nats(cell[beta], cell[alpha]):
                violations.append(NonAssociative(f"{name}: horizontal composition not preserved",
                                                 beta=beta, alpha=alpha))
    raise_first(violations)
    return CatDiagram(name, shape, dict(ob), dict(arrow), dict(cell))


def complete_cat_diagram(name, shape, ob, arrow, cell=None):
    """Fill identity functors / nats and forced composites, then validate."""
    ob = dict(ob)
    arrow = dict(arrow)
    cell = dict(cell or {})
    for x in shape.objects:
        arrow.setdefault(shape.id1(x), fincat.identity_functor(ob[x]))
    changed = True
    while changed:
        changed = False
        for g in shape.one_cells:
            for f in shape.one_cells:
                if shape.tgt1(f) != shape.src1(g):
                    continue
                gf = shape.hcomp1(g, f)
                if gf not in arrow and g in arrow and f in arrow:
                    arrow[gf] = fincat.compose_functors(arrow[g], arrow[f])
                    changed = True
    for f in shape.one_cells:
        if f in arrow:
            cell.setdefault(shape.id2(f), fincat.identity_nat(arrow[f]))
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
                    if c not in cell and beta in cell and alpha in cell:
                        cell[c] = fincat.vcomp_nats(cell[beta], cell[alpha])
                        changed = True
        for beta in shape.two_cells:
            for alpha in shape.two_cells:
                if shape.two_cell_hom[alpha][1] != shape.two_cell_hom[beta][0]:
                    continue
                c = shape.hcomp2(beta, alpha)
                if c not in cell and beta in cell and alpha in cell:
                    cell[c] = fincat.hcomp_nats(cell[beta], cell[alpha])
                    changed = True
    return validate_cat_diagram(name, shape, ob, arrow, cell)

"""Elaboration: a parsed Document becomes an environment of validated values.

Every validator of the other modules runs here; identity cells are inserted
before validation, identity composites are auto-completed, and any law
violation is re-raised with the source span of the offending declaration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import fincat
from ..catvalued import complete_cat_diagram
from ..errors import ElaborationError, TwoCheckError, UnresolvedReference
from ..fincat import NatTransformation, validate_category, validate_functor
from ..fixtures import TwoCatBuilder
from ..monad import OMEGA_VARIANT, CO_OMEGA_VARIANT, validate_algebra, validate_monad, validate_weak_morphism
from ..twocat import (
    TwoFunctor,
    complete_two_functor,
    omega_l,
    validate_arrow_family,
    validate_cell_family,
)
from .parser import Assign, Equation, Field, SubBlock, TypedDecl


@dataclass
class TaskDecl:
    name: str
    fields: dict
    span: object


@dataclass
class Environment:
    fincats: dict = field(default_factory=dict)
    twocats: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    weights: dict = field(default_factory=dict)
    diagrams: dict = field(default_factory=dict)
    monads: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    tasks: dict = field(default_factory=dict)
    order: list = field(default_factory=list)

    def task_list(self):
        return [self.tasks[name] for name in self.order if name in self.tasks]


def _wrap(decl, exc):
    span = (decl.span.line, decl.span.column, decl.span.end_line, decl.span.end_column)
    return ElaborationError(f"{decl.kind} {decl.name}: {exc}", span, cause=exc)


def _require(env_map, name, what, decl):
    if name not in env_map:
        raise _wrap(decl, UnresolvedReference(f"unknown {what} {name!r}"))
    return env_map[name]


def elaborate(document):
    env = Environment()
    for decl in document.declarations:
        store = _store_for(env, decl.kind)
        if decl.name in store:
            raise _wrap(decl, TwoCheckError(f"duplicate {decl.kind} name {decl.name!r}"))
        try:
            handler = _HANDLERS[decl.kind]
        except KeyError:
            raise _wrap(decl, TwoCheckError(f"unknown declaration kind {decl.kind!r}"))
        try:
            value = handler(env, decl)
        except ElaborationError:
            raise
        except TwoCheckError as exc:
            raise _wrap(decl, exc)
        store[decl.name] = value
        env.order.append(decl.name)
    return env


def _store_for(env, kind):
    return {
        "fincat": env.fincats,
        "twocat": env.twocats,
        "family": env.families,
        "functor": env.functors,
        "weight": env.weights,
        "diagram": env.diagrams,
        "monad": env.monads,
        "algebra": env.algebras,
        "morphism": env.morphisms,
        "task": env.tasks,
    }[kind]


def _elab_fincat(env, decl):
    objects = []
    arrows = {}
    compose = {}
    for stmt in decl.statements:
        if isinstance(stmt, Field) and stmt.head == "objects":
            objects.extend(stmt.values)
        elif isinstance(stmt, TypedDecl) and stmt.kw == "arrow" and stmt.arrow_kind == "->":
            arrows[stmt.name] = (stmt.src, stmt.tgt)
        elif isinstance(stmt, Equation) and stmt.op == ".":
            compose[(stmt.left, stmt.right)] = stmt.result
        else:
            raise TwoCheckError(f"unexpected statement in fincat body: {stmt}")
    ident = {x: f"id_{x}" for x in objects}
    morphisms = list(ident.values()) + list(arrows)
    source = {ident[x]: x for x in objects}
    target = {ident[x]: x for x in objects}
    for a, (s, t) in arrows.items():
        source[a], target[a] = s, t
    composition = {}
    for g in morphisms:
        for f in morphisms:
            if target.get(f) != source.get(g):
                continue
            if f == ident.get(source.get(f)):
                composition[(g, f)] = g
            elif g == ident.get(target.get(g)):
                composition[(g, f)] = f
    composition.update(compose)
    return validate_category(decl.name, objects, morphisms, source, target, ident, composition)


def _elab_twocat(env, decl):
    builder = TwoCatBuilder(decl.name, fill_unique=False)
    for stmt in decl.statements:
        if isinstance(stmt, Field) and stmt.head == "objects":
            builder.obj(*stmt.values)
        elif isinstance(stmt, TypedDecl) and stmt.kw == "onecell" and stmt.arrow_kind == "->":
            builder.one(stmt.name, stmt.src, stmt.tgt)
        elif isinstance(stmt, TypedDecl) and stmt.kw == "twocell" and stmt.arrow_kind == "=>":
            builder.two(stmt.name, stmt.src, stmt.tgt)
        elif isinstance(stmt, Equation) and stmt.op == "*":
            builder.vert(stmt.left, stmt.right, stmt.result)
        elif isinstance(stmt, Equation) and stmt.op == ".":
            if stmt.left in builder.ones or stmt.left.startswith("id_"):
                builder.comp1(stmt.left, stmt.right, stmt.result)
            else:
                builder.horiz(stmt.left, stmt.right, stmt.result)
        else:
            raise TwoCheckError(f"unexpected statement in twocat body: {stmt}")
    return builder.build()


def _elab_family(env, decl):
    host = _require(env.twocats, decl.on, "twocat", decl)
    members = set(decl.members)
    if decl.family_sort == "arrows":
        members |= {host.id1(x) for x in host.objects}
        return validate_arrow_family(host, members)
    members |= {host.id2(f) for f in host.one_cells}
    return validate_cell_family(host, members)


def _elab_functor(env, decl):
    src = _require(env.fincats, decl.source, "fincat", decl)
    tgt = _require(env.fincats, decl.target, "fincat", decl)
    object_map, morphism_map = {}, {}
    for stmt in decl.statements:
        if isinstance(stmt, Assign) and stmt.kw == "object":
            object_map[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "arrow":
            morphism_map[stmt.key] = stmt.value
        else:
            raise TwoCheckError(f"unexpected statement in functor body: {stmt}")
    for x in src.objects:
        if x in object_map:
            morphism_map.setdefault(src.identity[x], tgt.identity[object_map[x]])
    return validate_functor(decl.name, src, tgt, object_map, morphism_map)


def _elab_weight(env, decl):
    shape = _require(env.twocats, decl.on, "twocat", decl)
    ob, arrow, cell = {}, {}, {}
    for stmt in decl.statements:
        if isinstance(stmt, Assign) and stmt.kw == "object":
            ob[stmt.key] = _require(env.fincats, stmt.value, "fincat", decl)
        elif isinstance(stmt, Assign) and stmt.kw == "arrow":
            arrow[stmt.key] = _require(env.functors, stmt.value, "functor", decl)
        elif isinstance(stmt, SubBlock) and stmt.kw == "cell":
            component = {}
            for inner in stmt.statements:
                if isinstance(inner, Assign) and inner.kw == "component":
                    component[inner.key] = inner.value
                else:
                    raise TwoCheckError(f"unexpected statement in cell block: {inner}")
            cell[stmt.name] = component
        else:
            raise TwoCheckError(f"unexpected statement in weight body: {stmt}")
    nat_cells = {}
    for alpha, component in cell.items():
        f, g = shape.src2(alpha), shape.tgt2(alpha)
        if f not in arrow or g not in arrow:
            raise UnresolvedReference(f"cell {alpha} assigned before its boundary arrows")
        nat_cells[alpha] = fincat.validate_nat_transformation(arrow[f], arrow[g], component)
    return complete_cat_diagram(decl.name, shape, ob, arrow, nat_cells)


def _elab_diagram(env, decl):
    shape = _require(env.twocats, decl.source, "twocat", decl)
    target = env.twocats.get(decl.target)
    if target is None:
        raise _wrap(decl, UnresolvedReference(f"unknown twocat {decl.target!r}"))
    object_map, one_map, two_map = {}, {}, {}
    for stmt in decl.statements:
        if isinstance(stmt, Assign) and stmt.kw == "object":
            object_map[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "onecell":
            one_map[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "twocell":
            two_map[stmt.key] = stmt.value
        else:
            raise TwoCheckError(f"unexpected statement in diagram body: {stmt}")
    return complete_two_functor(decl.name, shape, target, object_map, one_map, two_map)


def _elab_monad(env, decl):
    K = _require(env.twocats, decl.on, "twocat", decl)
    object_map, one_map, two_map = {}, {}, {}
    mult, unit = {}, {}
    for stmt in decl.statements:
        if isinstance(stmt, Assign) and stmt.kw == "object":
            object_map[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "onecell":
            one_map[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "twocell":
            two_map[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "mult":
            mult[stmt.key] = stmt.value
        elif isinstance(stmt, Assign) and stmt.kw == "unit":
            unit[stmt.key] = stmt.value
        else:
            raise TwoCheckError(f"unexpected statement in monad body: {stmt}")
    endo = complete_two_functor(f"T<{decl.name}>", K, K, object_map, one_map, two_map)
    return validate_monad(K, endo, mult, unit)


def _elab_algebra(env, decl):
    monad = _require(env.monads, decl.of, "monad", decl)
    carrier = structure = None
    for stmt in decl.statements:
        if isinstance(stmt, Field) and stmt.head == "carrier" and len(stmt.values) == 1:
            carrier = stmt.values[0]
        elif isinstance(stmt, Field) and stmt.head == "structure" and len(stmt.values) == 1:
            structure = stmt.values[0]
        else:
            raise TwoCheckError(f"unexpected statement in algebra body: {stmt}")
    if carrier is None or structure is None:
        raise TwoCheckError("algebra needs carrier and structure")
    return validate_algebra(monad, carrier, structure)


def _elab_morphism(env, decl):
    monad = _require(env.monads, decl.of, "monad", decl)
    src = _require(env.algebras, decl.source, "algebra", decl)
    tgt = _require(env.algebras, decl.target, "algebra", decl)
    arrow = cellv = None
    variant = OMEGA_VARIANT
    for stmt in decl.statements:
        if isinstance(stmt, Field) and stmt.head == "arrow" and len(stmt.values) == 1:
            arrow = stmt.values[0]
        elif isinstance(stmt, Field) and stmt.head == "cell" and len(stmt.values) == 1:
            cellv = stmt.values[0]
        elif isinstance(stmt, Field) and stmt.head == "variant" and len(stmt.values) == 1:
            variant = {"omega": OMEGA_VARIANT, "coomega": CO_OMEGA_VARIANT}[stmt.values[0]]
        else:
            raise TwoCheckError(f"unexpected statement in morphism body: {stmt}")
    if arrow is None:
        raise TwoCheckError("morphism needs an underlying arrow")
    K = monad.base
    if cellv is None:
        want = K.hcomp1(tgt.structure, monad.T_one(arrow))
        cellv = K.id2(want)
    return validate_weak_morphism(monad, src, tgt, arrow, cellv, omega_l(K), variant)


def _elab_task(env, decl):
    fields = {}
    for stmt in decl.statements:
        if isinstance(stmt, Field):
            fields[stmt.head] = list(stmt.values)
        elif isinstance(stmt, Assign):
            fields.setdefault("map", {})
            if stmt.kw == "map":
                fields["map"][stmt.key] = stmt.value
            else:
                fields[stmt.kw] = [stmt.key, stmt.value]
        else:
            raise TwoCheckError(f"unexpected statement in task body: {stmt}")
    return TaskDecl(decl.name, fields, decl.span)


_HANDLERS = {
    "fincat": _elab_fincat,
    "twocat": _elab_twocat,
    "family": _elab_family,
    "functor": _elab_functor,
    "weight": _elab_weight,
    "diagram": _elab_diagram,
    "monad": _elab_monad,
    "algebra": _elab_algebra,
    "morphism": _elab_morphism,
    "task": _elab_task,
}

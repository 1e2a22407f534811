"""Task execution: dispatch elaborated task declarations to the engine."""

from __future__ import annotations

from .. import catlim, limits, monad as monad_mod
from ..errors import TwoCheckError
from ..lifting import (
    MODE_OP,
    corollary_runner,
    lift_conical_op_limit,
    lift_equifier,
    lift_inserter,
    lift_product,
    lift_weighted_op_limit,
)
from ..monad import build_talg, enumerate_monads, validate_algebra_two_cell
from ..twocat import canonical_omegas
from .report import Report, qualify

LIMIT_KINDS = ("limit", "limit-weighted", "cat-limit")
LIFT_KINDS = ("lift-product", "lift-inserter", "lift-iso-inserter", "lift-equifier",
              "lift-conical", "lift-weighted", "corollary")


def _field(task, key, default=None):
    value = task.fields.get(key, default)
    return value


def _single(task, key, default=None):
    value = task.fields.get(key)
    if value is None:
        return default
    if isinstance(value, list):
        if len(value) != 1:
            raise TwoCheckError(f"task {task.name}: field {key} expects one value")
        return value[0]
    return value


def _families(env, task, key, host):
    names = task.fields.get(key, [])
    out = {}
    canon = canonical_omegas(host)
    for n in names:
        if n in env.families:
            out[n] = env.families[n]
        elif n in canon:
            out[n] = canon[n]
        else:
            raise TwoCheckError(f"task {task.name}: unknown family {n!r}")
    return out


def _family(env, task, key, host=None, default=None):
    name = _single(task, key)
    if name is None:
        return default
    if name in env.families:
        return env.families[name]
    if host is not None and name in ("s", "p", "l"):
        return canonical_omegas(host)[name]
    raise TwoCheckError(f"task {task.name}: unknown family {name!r}")


def _orientation(task):
    return {"om": limits.OMEGA, "omop": limits.OMEGA_OP, None: limits.OMEGA}[
        _single(task, "orientation")
    ]


def run_task(env, task, budget=None, probes=None, version=""):
    report = Report(task.name, "pass", version=version)
    kind = _single(task, "kind", "validate")
    try:
        _dispatch(env, task, kind, report, budget, probes)
    except TwoCheckError as exc:
        report.status = "error"
        report.add("error", "fail", str(exc))
    return report


def _dispatch(env, task, kind, report, budget, probes):
    if kind == "validate":
        report.add("elaborated", "pass")
        return

    if kind == "limit":
        F = env.diagrams[_single(task, "diagram")]
        sigma = _family(env, task, "sigma")
        omega = _family(env, task, "omega", F.target)
        primes = _families(env, task, "compat", F.target)
        cert = limits.find_conical_limit(F, sigma, omega, _orientation(task),
                                         omega_primes=primes, budget=budget)
        expect = _single(task, "expect", "found")
        if cert is None:
            report.status = "pass" if expect == "not-found" else "fail"
            report.add("limit", "not-found" if expect == "not-found" else "fail", "no vertex certifies")
            return
        if expect == "not-found":
            report.status = "fail"
            report.add("limit", "fail", f"unexpected limit at {cert.vertex}")
            return
        report.add("limit-vertex", "pass", cert.vertex)
        report.add("vertices", "pass", ",".join(cert.all_vertices))
        for name, ok in sorted(cert.compatibility.items()):
            report.add(f"compat:{name}", "pass" if ok else "fail")
            if not ok:
                report.status = "fail"
        report.statistics["cones"] = sum(
            len(cc.cones) for cc in cert.cones_categories.values()
        )
        return

    if kind == "limit-weighted":
        W = env.weights[_single(task, "weight")]
        F = env.diagrams[_single(task, "diagram")]
        sigma = _family(env, task, "sigma")
        omega = _family(env, task, "omega", F.target)
        primes = _families(env, task, "compat", F.target)
        cert = limits.find_weighted_limit(W, F, sigma, omega, _orientation(task),
                                          omega_primes=primes, budget=budget)
        if cert is None:
            report.status = "fail"
            report.add("limit", "fail", "no vertex certifies")
            return
        report.add("limit-vertex", "pass", cert.vertex)
        for name, ok in sorted(cert.compatibility.items()):
            report.add(f"compat:{name}", "pass" if ok else "fail")
            if not ok:
                report.status = "fail"
        return

    if kind == "cat-limit":
        W = env.weights[_single(task, "weight")]
        F = env.weights[_single(task, "diagram")]
        sigma = _family(env, task, "sigma")
        tag = _single(task, "omegatag", "l")
        result = catlim.cat_limit_construct(W, F, sigma, tag, probes=probes, budget=budget)
        report.add("limit-objects", "pass", str(len(result.limit.objects)))
        report.add("limit-morphisms", "pass", str(len(result.limit.morphisms)))
        for pname, ok in sorted(result.probe_reports.items()):
            report.add(f"probe:{pname}", "pass" if ok else "fail")
            if not ok:
                report.status = "fail"
        report.add("probe-verified", "pass" if result.probe_verified else "fail")
        if not result.probe_verified:
            report.status = "fail"
        return

    if kind == "enumerate-monads":
        K = env.twocats[_single(task, "twocat")]
        monads = enumerate_monads(K, budget=budget)
        report.add("count", "pass", str(len(monads)))
        report.statistics["monads"] = len(monads)
        expect = _single(task, "expect")
        if expect is not None and int(expect) != len(monads):
            report.status = "fail"
            report.add("expected-count", "fail", expect)
        return

    if kind in LIFT_KINDS:
        _dispatch_lift(env, task, kind, report, budget)
        return

    raise TwoCheckError(f"unknown task kind {kind!r}")


def _lift_report(report, result, K):
    for check, outcome, witness in result.transcript:
        report.add(check, outcome, witness)
    if result.status == "pass":
        report.status = "pass"
    elif result.status == "precondition-failed":
        report.status = "fail"
        if result.error is not None and getattr(result.error, "witness", None):
            for key, value in sorted(result.error.witness.items()):
                try:
                    report.add("witness", "fail", f"{key}={qualify(K, str(value))}")
                except Exception:
                    report.add("witness", "fail", f"{key}={value}")
    else:
        report.status = "error"


def _dispatch_lift(env, task, kind, report, budget):
    monad = env.monads[_single(task, "monad")]
    K = monad.base
    omega = _family(env, task, "omega", K)
    detect = _families(env, task, "detect", K)

    if kind == "lift-product":
        talg = build_talg(monad, omega, budget=budget)
        algebras = [env.algebras[n] for n in _field(task, "algebras", [])]
        base = limits.find_special_limit(K, "product", {"objects": [a.carrier for a in algebras]})
        if base is None:
            report.status = "fail"
            report.add("base-product", "fail", "no product of the carriers in the base")
            return
        result = lift_product(monad, omega, talg, algebras, base, detect)
        _lift_report(report, result, K)
        return

    if kind in ("lift-inserter", "lift-iso-inserter"):
        talg = build_talg(monad, omega, budget=budget)
        mf = env.morphisms[_single(task, "left")]
        mg = env.morphisms[_single(task, "right")]
        limit_kind = "inserter" if kind == "lift-inserter" else "iso-inserter"
        base = limits.find_special_limit(K, limit_kind, {"f": mf.one_cell, "g": mg.one_cell})
        if base is None:
            report.status = "fail"
            report.add("base-inserter", "fail", "no inserter of (f, g) in the base")
            return
        result = lift_inserter(monad, omega, talg, mf, mg, base, detect, kind=limit_kind)
        _lift_report(report, result, K)
        return

    if kind == "lift-equifier":
        talg = build_talg(monad, omega, budget=budget)
        mf = env.morphisms[_single(task, "left")]
        mg = env.morphisms[_single(task, "right")]
        alpha = validate_algebra_two_cell(mf, mg, _single(task, "alpha"))
        beta = validate_algebra_two_cell(mf, mg, _single(task, "beta"))
        base = limits.find_special_limit(K, "equifier",
                                         {"alpha": alpha.two_cell, "beta": beta.two_cell})
        if base is None:
            report.status = "fail"
            report.add("base-equifier", "fail", "no equifier of (alpha, beta) in the base")
            return
        result = lift_equifier(monad, omega, talg, alpha, beta, base, detect)
        _lift_report(report, result, K)
        return

    if kind in ("lift-conical", "lift-weighted"):
        sigma = _family(env, task, "sigma")
        shape = sigma.host
        morphisms_family = _family(env, task, "morphisms", K)
        talg = build_talg(monad, morphisms_family, budget=budget)
        spec = {"shape": shape, "objects": {}, "morphisms": {}}
        for key, value in _field(task, "map", {}).items():
            if value in env.algebras:
                spec["objects"][key] = env.algebras[value]
            elif value in env.morphisms:
                spec["morphisms"][key] = env.morphisms[value]
            else:
                raise TwoCheckError(f"task {task.name}: map target {value!r} unknown")
        from ..lifting import _transport_diagram

        Fbar = _transport_diagram(spec, talg)
        if kind == "lift-weighted":
            W = env.weights[_single(task, "weight")]
            result = lift_weighted_op_limit(monad, sigma, omega, talg, W, Fbar, detect,
                                            budget=budget)
        else:
            from ..twocat import compose_two_functors

            F = compose_two_functors(talg.forgetful, Fbar)
            base = limits.find_conical_limit(F, sigma, omega, limits.OMEGA_OP, budget=budget)
            if base is None:
                report.status = "fail"
                report.add("base-limit", "fail", "no base sigma-omega-op limit")
                return
            result = lift_conical_op_limit(monad, sigma, omega, talg, Fbar, base, detect)
        _lift_report(report, result, K)
        return

    if kind == "corollary":
        W = env.weights[_single(task, "weight")]
        corol = _single(task, "corollary")
        gamma = _single(task, "gamma")
        sigma = _family(env, task, "sigma")
        spec = {"shape": W.shape, "objects": {}, "morphisms": {}}
        for key, value in _field(task, "map", {}).items():
            if value in env.algebras:
                spec["objects"][key] = env.algebras[value]
            elif value in env.morphisms:
                spec["morphisms"][key] = env.morphisms[value]
        result = corollary_runner(corol, gamma, monad, W, spec, sigma=sigma, budget=budget)
        _lift_report(report, result, K)
        return

    raise TwoCheckError(f"unknown lift kind {kind!r}")

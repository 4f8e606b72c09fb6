"""Command-line front end.

    hopfgk families list
    hopfgk check axioms --family D --m 3 --d 1 --seed 42 --samples 50
    hopfgk check identities --m 2..10 --d 1..3
    hopfgk check structure --family taft --n 6 --t 3
    hopfgk export tables --family D --m 3 --d 1 --format structured --out d31.json

Exit status is 0 when every check passes, 1 when one fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Iterable

from .errors import HopfGKError
from .exactnum import CycNum
from .families import FAMILY_IDS, DAlgebra, LiuAlgebra, Plain, TaftAlgebra, TaftWord, UWord, make_family
from .hopfcore import CheckResult, Element, TensorElement, _merge, axiom_suite
from .qcomb import identity_suite
from . import structure as st


FAMILY_HELP = {
    "poly": "k[x], x primitive (no parameters)",
    "laurent": "k[x^-1, x], x group-like (no parameters)",
    "dihedral": "group algebra of the infinite dihedral group (no parameters)",
    "taft": "Taft H(n, t, xi): --n, --t, --xi-power",
    "liu": "generalized Liu B(n, omega, gamma): --n, --omega, --xi-power (gamma = zeta_n^p)",
    "D": "D(m, d, xi): --m, --d, --xi-power (xi = zeta_2m^p, (1+m)d even)",
}


class UsageError(Exception):
    pass


# -- reports --------------------------------------------------------------------------


@dataclass
class CheckReport:
    family: str
    params: dict
    field_order: int | None
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c["status"] == "pass" for c in self.checks)

    def add(self, result: CheckResult, duration: float | None = None):
        entry = {"name": result.name, "status": result.status}
        detail = result.render_detail() if not result.passed else (result.detail if isinstance(result.detail, str) else "")
        if detail:
            entry["detail"] = detail
        if duration is not None:
            entry["seconds"] = round(duration, 4)
        self.checks.append(entry)

    def run(self, name: str, thunk: Callable[[], CheckResult], timings: bool):
        start = time.perf_counter()
        try:
            result = thunk()
        except HopfGKError as exc:
            result = CheckResult(name, False, error=f"{type(exc).__name__}: {exc}")
        self.add(result, time.perf_counter() - start if timings else None)

    def to_json(self) -> dict:
        out = {"family": self.family, "params": self.params, "fieldOrder": self.field_order}
        if self.info:
            out["info"] = self.info
        out["checks"] = self.checks
        out["status"] = "pass" if self.passed else "fail"
        return out

    def to_text(self) -> str:
        p = " ".join(f"{k}={v}" for k, v in self.params.items()) or "-"
        lines = [f"family: {self.family}  params: {p}"
                 + (f"  field: Q(zeta_{self.field_order})" if self.field_order else "")]
        for k, v in self.info.items():
            lines.append(f"{k}: {v}")
        for c in self.checks:
            tail = f"  ({c['detail']})" if c.get("detail") else ""
            secs = f"  [{c['seconds']}s]" if "seconds" in c else ""
            lines.append(f"{c['status'].upper():5} {c['name']}{tail}{secs}")
        ok = sum(c["status"] == "pass" for c in self.checks)
        lines.append(f"summary: {ok}/{len(self.checks)} passed")
        return "\n".join(lines) + "\n"


def _params_record(pres) -> dict:
    return {k: (v.serialize() if isinstance(v, CycNum) else v) for k, v in pres.params.items()}


# -- argument handling -----------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """'a..b' inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected a..b or an integer") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _family_from_args(args):
    if not args.family:
        raise UsageError("--family is required")
    fam = args.family
    if fam == "taft":
        params = dict(n=args.n, t=args.t, xi_power=args.xi_power)
    elif fam == "liu":
        params = dict(n=args.n, omega=args.omega, xi_power=args.xi_power)
    elif fam == "D":
        params = dict(m=_int_arg(args.m, "--m"), d=_int_arg(args.d, "--d"), xi_power=args.xi_power)
    else:
        params = {}
    required = {"taft": ("n", "t"), "liu": ("n", "omega"), "D": ("m", "d")}.get(fam, ())
    for r in required:
        if params.get(r) is None:
            raise UsageError(f"--family {fam} needs --{r}")
    return make_family(fam, **params)


def _int_arg(value, flag):
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{flag} expects an integer for this command, got {value!r}") from None


def _family_parent():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--family", choices=FAMILY_IDS)
    p.add_argument("--m", help="D: m (check identities: a range a..b)")
    p.add_argument("--d", help="D: d (check identities: a range a..b)")
    p.add_argument("--n", type=int, help="taft / liu: n")
    p.add_argument("--t", type=int, help="taft: t")
    p.add_argument("--omega", type=int, help="liu: omega")
    p.add_argument("--xi-power", type=int, default=1, help="which primitive root: zeta^p (default 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="random samples (default 50 for axioms, 30 for structure)")
    p.add_argument("--max-xdeg", type=int, default=3)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--timings", action="store_true", help="include per-check wall-clock seconds")
    return p


def build_parser() -> argparse.ArgumentParser:
    parent = _family_parent()
    parser = argparse.ArgumentParser(prog="hopfgk", description="Exact checks for Hopf algebras of GK-dimension one.")
    top = parser.add_subparsers(dest="command", required=True)

    fam = top.add_parser("families", help="list the supported families")
    fam_sub = fam.add_subparsers(dest="action", required=True)
    fam_sub.add_parser("list", parents=[parent])

    check = top.add_parser("check", help="run a check suite")
    check_sub = check.add_subparsers(dest="action", required=True)
    for name, text in (("axioms", "Hopf axiom suite"), ("identities", "phi-product and q-binomial identities"),
                       ("structure", "winding automorphisms, gradings, quotient, integrals")):
        check_sub.add_parser(name, parents=[parent], help=text)

    export = top.add_parser("export", help="export exact tables")
    export_sub = export.add_subparsers(dest="action", required=True)
    export_sub.add_parser("tables", parents=[parent])
    return parser


# -- commands ------------------------------------------------------------------------------


def cmd_families_list(args) -> tuple[str, int]:
    if args.format == "structured":
        return json.dumps({"families": [{"id": k, "params": v} for k, v in FAMILY_HELP.items()]}, indent=2) + "\n", 0
    return "".join(f"{k:9} {v}\n" for k, v in FAMILY_HELP.items()), 0


def cmd_check_axioms(args) -> CheckReport:
    pres = _family_from_args(args)
    report = CheckReport(pres.family, _params_record(pres), pres.field.order)
    samples = 50 if args.samples is None else args.samples
    report.info = {"seed": args.seed, "samples": samples, "maxXdeg": args.max_xdeg}
    for name, thunk in axiom_suite(pres, args.seed, samples, args.max_xdeg):
        report.run(name, thunk, args.timings)
    return report


def cmd_check_identities(args) -> CheckReport:
    ms = parse_range(args.m if args.m is not None else "2..10")
    ds = parse_range(args.d if args.d is not None else "1..3")
    if ms[0] < 1 or ds[0] < 1:
        raise UsageError("m and d must be positive")
    report = CheckReport("identities", {"m": f"{ms[0]}..{ms[-1]}", "d": f"{ds[0]}..{ds[-1]}"}, None)
    start = time.perf_counter()
    groups: dict[str, list] = {}
    for rep in identity_suite(ms, ds):
        groups.setdefault(rep.name, []).append(rep)
    elapsed = time.perf_counter() - start
    for name in ("ce1", "ce2", "ce3-iff", "ce5", "ce6", "ce7", "kassel"):
        reps = groups.get(name, [])
        bad = next((r for r in reps if not r.holds), None)
        result = CheckResult(name, bad is None, f"{len(reps)} instances" if bad is None else bad.describe())
        report.add(result)
    if args.timings:
        report.info["seconds"] = round(elapsed, 4)
    return report


def _expected_io_im(pres):
    if isinstance(pres, DAlgebra):
        return 2 * pres.m, pres.m
    if isinstance(pres, LiuAlgebra):
        return pres.n, pres.n
    if isinstance(pres, TaftAlgebra):
        return pres.n, pres.n // gcd(pres.n, pres.t)
    return None


def structure_checks(pres, seed=0, samples=30, max_xdeg=3) -> Iterable[tuple[str, Callable[[], CheckResult]]]:
    """Named thunks for the structure suite of one presentation."""
    graded = isinstance(pres, (DAlgebra, LiuAlgebra, TaftAlgebra))
    if graded:
        def io_check():
            got = st.io_im(pres)
            want = _expected_io_im(pres)
            return CheckResult("io/im", got == want, f"io={got[0]}, im={got[1]}" if got == want
                               else f"got io={got[0]}, im={got[1]}; expected io={want[0]}, im={want[1]}")
        yield "io/im", io_check

        def intersect():
            left, right = st.winding_autos(pres)
            k = st.intersection_order(left, right)
            return CheckResult("winding automorphisms", left.compose(right).same_action(right.compose(left)),
                               f"relations respected, commute, |G_l cap G_r| = {k}")
        yield "winding automorphisms", intersect
        yield "grading laws", lambda: _merge(st.grading_laws(pres, seed, samples, max_xdeg), "grading laws")
        if isinstance(pres, TaftAlgebra) and pres.t and pres.n % pres.t == 0:
            yield "taft degree constraint", lambda: st.taft_degree_constraint(pres, seed, samples, max_xdeg)
        yield "integral character", lambda: _merge(st.integral_character(pres, seed), "integral character")
    if isinstance(pres, DAlgebra):
        yield "even-even part", lambda: _merge(st.tilde_subalgebra(pres, seed), "even-even part is B(m, md, gamma)")

        def quotient():
            Q = st.build_quotient_Dprime(pres.m, pres.d, pres.xi_power)
            want = 2 * pres.m ** 2 * pres.d
            assoc = Q.check_associative()
            results = [CheckResult("dimension", Q.dimension == want, f"{Q.dimension}")] + [assoc]
            results += st.check_integral_Dprime(Q)
            merged = _merge(results, "quotient D/(y)")
            if merged.passed:
                merged.detail = f"dimension {Q.dimension}, associative, integral verified"
            return merged
        yield "quotient D/(y)", quotient

    def witness():
        w = st.cocommutativity_witness(pres, seed, samples, max_xdeg)
        # the three commutative examples are cocommutative; the graded families are not
        ok = (w is not None) == graded
        text = pres.render_monomial(w) if w is not None else "none on generators and samples"
        return CheckResult("cocommutativity witness", ok, text)
    yield "cocommutativity witness", witness


def cmd_check_structure(args) -> CheckReport:
    pres = _family_from_args(args)
    report = CheckReport(pres.family, _params_record(pres), pres.field.order)
    samples = 30 if args.samples is None else args.samples
    for name, thunk in structure_checks(pres, args.seed, samples, args.max_xdeg):
        report.run(name, thunk, args.timings)
    return report


# -- export -------------------------------------------------------------------------------------


def _ser_element(e: Element) -> list:
    pres = e.algebra
    return [{"monomial": pres.render_monomial(k), "coeff": e.terms[k].serialize()}
            for k in sorted(e.terms, key=pres.sort_key)]


def _ser_tensor(t: TensorElement) -> list:
    pres = t.algebra
    keys = sorted(t.terms, key=lambda k: tuple(pres.sort_key(m) for m in k))
    return [{"left": pres.render_monomial(a), "right": pres.render_monomial(b), "coeff": t.terms[(a, b)].serialize()}
            for a, b in keys]


def export_tables(pres) -> dict:
    gens = list(pres.generator_names)
    table: dict[str, Any] = {
        "family": pres.family, "params": _params_record(pres), "fieldOrder": pres.field.order,
        "scalarEncoding": "rational coefficients of 1, z, ..., z^(deg-1) with z = zeta_fieldOrder",
        "generators": gens,
    }
    table["products"] = [
        {"left": a, "right": b, "result": _ser_element(pres.generator(a) * pres.generator(b))}
        for a in gens for b in gens
    ]
    table["relations"] = [
        {"relation": r.label, "lhs": _ser_element(pres.evaluate(r.lhs)), "rhs": _ser_element(pres.evaluate(r.rhs))}
        for r in pres.relations()
    ]
    table["coproducts"] = {g: _ser_tensor(pres.coproduct(pres.generator(g))) for g in gens}
    table["counits"] = {g: pres.counit(pres.generator(g)).serialize() for g in gens}
    table["antipodes"] = {g: _ser_element(pres.antipode(pres.generator(g))) for g in gens}
    try:
        B = st.bigrading_of(pres)
    except HopfGKError:
        table["bigrading"] = None
    else:
        monos = set()
        for g in gens:
            monos.update(pres.generator(g).terms)
        n = getattr(pres, "n", None) or getattr(pres, "m")
        if isinstance(pres, DAlgebra):
            monos.update(Plain(0, b, c) for b in range(n) for c in range(n))
            monos.update(UWord(0, c, i) for c in range(n) for i in range(n))
        elif isinstance(pres, LiuAlgebra):
            monos.update(Plain(0, b, c) for b in range(n) for c in range(n))
        else:
            monos.update(TaftWord(a, c) for a in range(2) for c in range(n))
        table["bigrading"] = {
            "N": B.N,
            "degrees": [{"monomial": pres.render_monomial(k), "degree": list(B.degree(k))}
                        for k in sorted(monos, key=pres.sort_key)],
        }
    return table


def _text_tables(t: dict) -> str:
    def el(items):
        if not items:
            return "0"
        return " + ".join(f"[{','.join(i['coeff'])}]*{i['monomial']}" for i in items)

    def tens(items):
        if not items:
            return "0"
        return " + ".join(f"[{','.join(i['coeff'])}]*{i['left']} (x) {i['right']}" for i in items)

    p = " ".join(f"{k}={v}" for k, v in t["params"].items()) or "-"
    lines = [f"family: {t['family']}  params: {p}  field: Q(zeta_{t['fieldOrder']})",
             f"scalars: {t['scalarEncoding']}", "generators: " + " ".join(t["generators"]), "", "products:"]
    lines += [f"  {e['left']} * {e['right']} = {el(e['result'])}" for e in t["products"]]
    lines += ["", "relations (both sides in normal form):"]
    lines += [f"  {e['relation']}: {el(e['lhs'])}  ==  {el(e['rhs'])}" for e in t["relations"]]
    lines += ["", "coproducts:"] + [f"  Delta({g}) = {tens(v)}" for g, v in t["coproducts"].items()]
    lines += ["", "counits:"] + [f"  eps({g}) = [{','.join(v)}]" for g, v in t["counits"].items()]
    lines += ["", "antipodes:"] + [f"  S({g}) = {el(v)}" for g, v in t["antipodes"].items()]
    if t["bigrading"]:
        lines += ["", f"bigrading (labels mod {t['bigrading']['N']}):"]
        lines += [f"  {e['monomial']}: {tuple(e['degree'])}" for e in t["bigrading"]["degrees"]]
    return "\n".join(lines) + "\n"


def cmd_export_tables(args) -> tuple[str, int]:
    pres = _family_from_args(args)
    t = export_tables(pres)
    if args.format == "structured":
        return json.dumps(t, indent=2) + "\n", 0
    return _text_tables(t), 0


# -- entry point -----------------------------------------------------------------------------------


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "families":
            text, code = cmd_families_list(args)
        elif args.command == "export":
            text, code = cmd_export_tables(args)
        else:
            cmd = {"axioms": cmd_check_axioms, "identities": cmd_check_identities,
                   "structure": cmd_check_structure}[args.action]
            report = cmd(args)
            if args.format == "structured":
                text = json.dumps(report.to_json(), indent=2) + "\n"
            else:
                text = report.to_text()
            code = 0 if report.passed else 1
    except (UsageError, HopfGKError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

One operation per invocation; every run writes a JSON report with the fields
``config``, ``result``, ``violations``, ``witnesses`` and ``timing_ms``.
Exit status: 0 no violations, 1 violations or counterexamples, 2 usage,
validation or cap errors.

Examples::

    ordsemi product --instance free_monoid --sets '[["a","b"],["a","b"]]'
    ordsemi scan theorem --max-word-len 3 --kmin 2 --kmax 4
    ordsemi witness pagano --n 2
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field, fields
from typing import Any

from . import commute, core, products, search
from .instances import INSTANCE_NAMES, make_instance, pagano_witness

COMMANDS = (
    "product", "bound", "verdict", "centralizer", "normalizer", "chain", "powerscan",
    "period", "scan theorem", "scan freiman", "laws", "witness pagano",
)
BOUND_KINDS = ("superadditivity", "sharpness", "ys-sy", "disjoint", "union")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    instance: dict = field(default_factory=lambda: {"name": "free_monoid", "alphabet_size": 2})
    params: dict = field(default_factory=dict)
    universe: dict = field(default_factory=dict)
    caps: dict = field(default_factory=lambda: {"product": products.PRODUCT_CAP,
                                                "enum": search.ENUM_CAP})
    seed: int = 0
    jobs: int = 1
    out: str | None = None
    format: str = "json"

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        if "command" not in d:
            raise UsageError("config needs a 'command'")
        cfg = cls(**d)
        cfg.validate()
        return cfg

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.instance.get("name") not in INSTANCE_NAMES:
            raise UsageError(f"unknown instance {self.instance.get('name')!r}")
        unknown = set(self.caps) - {"product", "enum"}
        if unknown:
            raise UsageError(f"unknown caps: {sorted(unknown)}")
        if self.format not in ("json", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError("jobs must be positive")

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d.pop("format")
        return d


def parse_element(inst: core.Semigroup, text) -> Any:
    """Parse an element from its documented text syntax (or a decoded JSON value)."""
    if isinstance(text, str):
        return inst.parse_text(text)
    return inst.parse(text)


def _parse_set(inst, obj) -> products.FiniteSubset:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise core.ParseError(exc.msg, exc.pos) from None
    if not isinstance(obj, list):
        raise UsageError("a set is a JSON array of elements")
    return products.FiniteSubset(inst, [inst.parse(x) for x in obj], validate=False)


def _universe(inst, spec: dict, seed: int) -> commute.Universe:
    if "elements" in spec:
        return commute.explicit_universe(inst, [inst.parse(x) for x in spec["elements"]])
    unknown = set(spec) - {"max_word_len", "max_int", "pool_size"}
    if unknown:
        raise UsageError(f"unknown universe keys: {sorted(unknown)}")
    return commute.default_universe(inst, seed=seed, **spec)


def _need(params: dict, *names):
    for n in names:
        if params.get(n) is None:
            raise UsageError(f"missing parameter --{n.replace('_', '-')}")


def _render_seq(inst, xs):
    return [core.render_loose(inst, x) for x in xs]


def execute(cfg: RunConfig) -> tuple[dict, int, list]:
    """Run one configured operation; return (result, violations, witnesses)."""
    inst = make_instance(**cfg.instance)
    p = cfg.params
    cmd = cfg.command
    cap = cfg.caps.get("product", products.PRODUCT_CAP)
    enum_cap = cfg.caps.get("enum", search.ENUM_CAP)

    if cmd == "witness pagano":
        _need(p, "n")
        return pagano_witness(int(p["n"])).to_dict(), 0, []

    if cmd == "product":
        _need(p, "sets")
        sets = [_parse_set(inst, s) for s in _load(p["sets"])]
        result = products.product_set(inst, sets, cap=cap)
        return {"set": result.render(), "size": len(result)}, 0, []

    if cmd == "bound":
        kind = p.get("kind", "superadditivity")
        if kind not in BOUND_KINDS:
            raise UsageError(f"unknown bound kind {kind!r}")
        if kind == "superadditivity":
            _need(p, "sets")
            sets = [_parse_set(inst, s) for s in _load(p["sets"])]
            b = products.superadditivity_check(inst, sets, cap=cap)
        elif kind == "sharpness":
            _need(p, "a", "sizes")
            sizes = [int(s) for s in _load(p["sizes"])]
            witness = products.sharpness_witness(inst, parse_element(inst, p["a"]), sizes)
            prod = products.product_set(inst, witness, cap=cap)
            return {"sets": [s.render() for s in witness], "product_size": len(prod),
                    "bound": 1 - len(sizes) + sum(sizes)}, 0, []
        else:
            _need(p, "set", "y")
            S = _parse_set(inst, p["set"])
            y = parse_element(inst, p["y"])
            if kind == "disjoint":
                d = products.disjointness_check(inst, S, y)
                bad = 0 if d.disjoint else 1
                return ({"disjoint": d.disjoint, "intersection": d.intersection.render()},
                        bad, d.intersection.render())
            fn = commute.ys_sy_bound if kind == "ys-sy" else products.union_bound_check
            b = fn(inst, S, y)
        return b._asdict(), 0 if b.holds else 1, []

    if cmd == "verdict":
        _need(p, "set")
        v = products.small_doubling_verdict(inst, _parse_set(inst, p["set"]), cap=cap)
        return v.to_dict(inst), 0 if v.theorem_consistent else 1, []

    if cmd in ("centralizer", "normalizer"):
        _need(p, "set")
        S = _parse_set(inst, p["set"])
        U = _universe(inst, cfg.universe, cfg.seed)
        c = commute.centralizer(inst, S, U)
        result = {"universe": U.recipe, "centralizer": c.render()}
        if cmd == "centralizer":
            return result, 0, []
        n = commute.normalizer(inst, S, U)
        rep = commute.check_normalizer_equals_centralizer(inst, S, U)
        result.update(normalizer=n.render(), equality=rep.to_dict(inst))
        bad = rep.failures if rep.applicable else 0
        return result, bad, _render_seq(inst, rep.witness or ())

    if cmd == "chain":
        _need(p, "a", "b")
        a, b = parse_element(inst, p["a"]), parse_element(inst, p["b"])
        ch = commute.neumann_chain(inst, a, b, int(p.get("n") or commute.DEFAULT_DEPTH))
        return ({"chain": _render_seq(inst, ch.chain),
                 "strictly_increasing": ch.strictly_increasing},
                0 if ch.strictly_increasing or not inst.linearly_ordered else 1, [])

    if cmd == "powerscan":
        _need(p, "a", "b")
        a, b = parse_element(inst, p["a"]), parse_element(inst, p["b"])
        rep = commute.power_commutation_scan(inst, a, b, int(p.get("n") or commute.DEFAULT_DEPTH))
        bad = rep.failures if inst.linearly_ordered else 0
        return rep.to_dict(inst), bad, _render_seq(inst, rep.witness or ())

    if cmd == "period":
        _need(p, "a")
        a = parse_element(inst, p["a"])
        rec = commute.periodicity(inst, a, int(p.get("max_n") or commute.DEFAULT_MAX_N))
        result = {"element": inst.render(a), "periodic": rec.periodic, "index": rec.index,
                  "period": rec.period, "aperiodic_up_to": rec.bound}
        bad = int(rec.periodic and inst.linearly_ordered and a != inst.identity)
        return result, bad, []

    if cmd == "scan theorem":
        U = _universe(inst, cfg.universe, cfg.seed)
        rep = search.exhaustive_theorem_scan(
            inst, U, int(p.get("kmin", 2)), int(p.get("kmax", 4)), cap_enum=enum_cap, jobs=cfg.jobs)
        return rep.to_dict(), rep.violations, rep.violation_list

    if cmd == "scan freiman":
        U = _universe(inst, cfg.universe, cfg.seed)
        rep = search.freiman_progression_explorer(
            inst, U, int(p.get("kmax", 4)), kmin=int(p.get("kmin", 2)), cap_enum=enum_cap)
        return rep.to_dict(), 0, []

    if cmd == "laws":
        U = _universe(inst, cfg.universe, cfg.seed)
        reports = [core.check_total_order(inst, U, seed=cfg.seed),
                   core.check_associativity(inst, U, seed=cfg.seed),
                   core.check_cancellativity(inst, U, seed=cfg.seed)]
        reports += [core.check_order_laws(inst, U, mode, seed=cfg.seed)
                    for mode in ("translation", "powers", "idempotent-power")]
        suite = search.randomized_law_suite(inst, int(p.get("trials", 1000)), cfg.seed)
        bad = sum(r.failures for r in reports) + suite.violations
        witnesses = [r.to_dict(inst)["witness"] for r in reports if r.witness is not None]
        return ({"linearly_ordered": inst.linearly_ordered, "universe": U.recipe,
                 "laws": [r.to_dict(inst) for r in reports], "random_suite": suite.to_dict()},
                bad, witnesses + suite.violation_list)

    raise UsageError(f"unknown command {cmd!r}")


def _load(v):
    if isinstance(v, str):
        try:
            return json.loads(v)
        except json.JSONDecodeError as exc:
            raise core.ParseError(exc.msg, exc.pos) from None
    return v


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute a validated config; return (exit status, report document)."""
    t0 = time.perf_counter()
    result, violations, witnesses = execute(cfg)
    report = {
        "config": cfg.echo(),
        "result": result,
        "violations": violations,
        "witnesses": witnesses,
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    return (0 if violations == 0 else 1), report


# ---------------------------------------------------------------------------
# argument parsing


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("instance")
    g.add_argument("--instance", default="free_monoid", choices=INSTANCE_NAMES)
    g.add_argument("--alphabet-size", type=int, default=2)
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--carrier", default="p,q", help="comma-separated left_zero carrier")
    g = p.add_argument_group("universe")
    g.add_argument("--max-word-len", type=int, default=None)
    g.add_argument("--max-int", type=int, default=None)
    g.add_argument("--pool-size", type=int, default=None)
    g.add_argument("--universe", default=None, help="explicit JSON array of elements")
    g = p.add_argument_group("run")
    g.add_argument("--kmin", type=int, default=2)
    g.add_argument("--kmax", type=int, default=4)
    g.add_argument("--trials", type=int, default=1000)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--cap-product", type=int, default=products.PRODUCT_CAP)
    g.add_argument("--cap-enum", type=int, default=search.ENUM_CAP)
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--out", default=None)
    g.add_argument("--format", choices=("json", "text"), default="json")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ordsemi", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *args, parent=sub, **kw):
        sp = parent.add_parser(name, parents=[common], **kw)
        for a in args:
            if a == "sets":
                sp.add_argument("--sets", required=True, help="JSON array of sets")
            elif a == "set":
                sp.add_argument("--set", dest="set_", required=True, help="JSON array")
            elif a in ("a", "b"):
                sp.add_argument(f"--{a}", required=True)
            elif a == "n":
                sp.add_argument("--n", type=int, default=None)
        return sp

    add("product", "sets", help="product set S1...Sn")
    sp = add("bound", help="cardinality bounds")
    sp.add_argument("--kind", choices=BOUND_KINDS, default="superadditivity")
    sp.add_argument("--sets")
    sp.add_argument("--set", dest="set_")
    sp.add_argument("--y")
    sp.add_argument("--a")
    sp.add_argument("--sizes")
    add("verdict", "set", help="small-doubling verdict for S")
    add("centralizer", "set")
    add("normalizer", "set")
    add("chain", "a", "b", "n", help="Neumann chain for ab < ba")
    add("powerscan", "a", "b", "n")
    sp = add("period", help="index and period of an element")
    sp.add_argument("--a", required=True)
    sp.add_argument("--max-n", type=int, default=None)
    scan = sub.add_parser("scan").add_subparsers(dest="scan", required=True)
    add("theorem", parent=scan)
    add("freiman", parent=scan)
    add("laws", help="law battery on a universe plus random triples")
    wit = sub.add_parser("witness").add_subparsers(dest="witness", required=True)
    sp = add("pagano", parent=wit)
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("batch", help="run a JSON array of config objects")
    sp.add_argument("file")
    sp.add_argument("--out", default=None)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    command = ns.command
    if command == "scan":
        command = f"scan {ns.scan}"
    elif command == "witness":
        command = f"witness {ns.witness}"
    instance: dict = {"name": ns.instance}
    if ns.instance in ("free_monoid", "semiring"):
        instance["alphabet_size"] = ns.alphabet_size
    elif ns.instance.endswith("_triangular"):
        instance["dim"] = ns.dim
    elif ns.instance == "left_zero":
        instance["carrier"] = [c for c in ns.carrier.split(",") if c]
    universe: dict = {}
    if ns.universe is not None:
        universe["elements"] = _load(ns.universe)
    for key in ("max_word_len", "max_int", "pool_size"):
        if getattr(ns, key) is not None:
            universe[key] = getattr(ns, key)
    params = {}
    for key in ("sets", "set_", "y", "a", "b", "n", "max_n", "sizes", "kind"):
        v = getattr(ns, key, None)
        if v is not None:
            params[key.rstrip("_")] = v
    if command.startswith("scan"):
        params.update(kmin=ns.kmin, kmax=ns.kmax)
    if command == "laws":
        params["trials"] = ns.trials
    cfg = RunConfig(command, instance, params, universe,
                    {"product": ns.cap_product, "enum": ns.cap_enum},
                    ns.seed, ns.jobs, ns.out, ns.format)
    cfg.validate()
    return cfg


def _emit(doc, fmt: str, out: str | None):
    if fmt == "text" and isinstance(doc, dict):
        lines = [f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in doc.items()]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


EXPECTED_ERRORS = (UsageError, core.DomainError, core.PreconditionError,
                   core.EmptySampleError, core.CapExceededError, TypeError, ValueError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "batch":
            with open(ns.file) as fh:
                configs = json.load(fh)
            if not isinstance(configs, list):
                raise UsageError("a batch file holds a JSON array of configs")
            cfgs = [RunConfig.from_dict(c) for c in configs]
            status, docs = 0, []
            for cfg in cfgs:
                s, doc = run(cfg)
                status = max(status, s)
                docs.append(doc)
            _emit(docs, "json", ns.out)
            return status
        cfg = config_from_args(ns)
        status, doc = run(cfg)
    except EXPECTED_ERRORS as exc:
        print(f"ordsemi: error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"ordsemi: error: {exc}", file=sys.stderr)
        return 2
    _emit(doc, cfg.format, cfg.out)
    return status


if __name__ == "__main__":
    sys.exit(main())

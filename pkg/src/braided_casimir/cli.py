"""Command-line front end.

Exit status: 0 success / all checks pass, 1 some identity check failed,
2 usage error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import pbw
from .cache import CacheStore, cache_key, default_cache_path
from .capelli import capelli_poly
from .central import (
    DegenerateSamplesError,
    HCImagePoly,
    braided_casimir,
    charpoly_interpolate,
    conjecture_scan,
    gl2_hc_formula,
    shifted_determinant,
    upoly_hc_image,
)
from .irreps import TensorBoundExceeded, irrep
from .mixed import WorkBoundExceeded
from .noncomm import UPoly
from .pbw import element_to_json, format_element, hc_image, parse_element
from .suites import SUITES, run_suite

log = logging.getLogger("braided_casimir")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    weight: tuple | None = None
    mu_samples: list | str = "auto"
    fmt: str = "text"
    cache_path: str | None = None
    parallelism: int = 1
    term_bound: int = pbw.DEFAULT_TERM_BOUND
    with_hc: bool = False
    suite: str | None = None
    element: str | None = None

    def __post_init__(self):
        if self.n < 2:
            raise UsageError("--n must be at least 2")
        if self.parallelism < 1:
            raise UsageError("--parallelism must be at least 1")
        if self.term_bound < 1:
            raise UsageError("--term-bound must be positive")


def parse_weight(text: str, n: int) -> tuple:
    try:
        comps = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise UsageError(f"weight {text!r} is not a comma-separated integer list") from exc
    if len(comps) != n:
        raise UsageError(f"weight {text!r} has {len(comps)} entries, expected n = {n}")
    if any(a < b for a, b in zip(comps, comps[1:])):
        raise UsageError(f"weight {text!r} is not dominant")
    return comps


def parse_mu(text: str, n: int):
    if text == "auto":
        return "auto"
    return [parse_weight(chunk, n) for chunk in text.split(";") if chunk.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank of gl_n (default 2)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", default=None, help="cache file (default: $BRAIDED_CASIMIR_CACHE)")
    common.add_argument("--parallelism", type=int, default=1)
    common.add_argument("--term-bound", type=int, default=pbw.DEFAULT_TERM_BOUND)
    common.add_argument("-v", "--verbose", action="store_true")

    weighted = argparse.ArgumentParser(add_help=False)
    weighted.add_argument("--lambda", dest="weight", required=True, help="dominant weight, e.g. 3,1")

    p = argparse.ArgumentParser(prog="braided-casimir", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("omega", parents=[common, weighted], help="braided Casimir matrix")
    sd = sub.add_parser("sdet", parents=[common, weighted], help="shifted determinant D(u)")
    sd.add_argument("--hc", action="store_true", help="include the Harish-Chandra image")
    cp = sub.add_parser("charpoly", parents=[common, weighted], help="HC image of the characteristic polynomial")
    cp.add_argument("--mu", default="auto", help="'auto' or samples like '3,0;4,1'")
    hc = sub.add_parser("hc", parents=[common], help="Harish-Chandra image of a central element")
    hc.add_argument("--element", required=True, help="e.g. 'E[1,1]E[2,2] - E[2,1]E[1,2] - E[1,1]'")
    cap = sub.add_parser("capelli", parents=[common, weighted], help="Capelli polynomial of a partition")
    cap.add_argument("--hc", action="store_true")
    ver = sub.add_parser("verify", parents=[common], help="run identity suites")
    ver.add_argument("--suite", choices=SUITES, default="all")
    scan = sub.add_parser("conjecture-scan", parents=[common], help="experimental centrality scan")
    scan.add_argument("--lambda", dest="weight", default=None)
    scan.add_argument("--permute", action="store_true")
    return p


def config_from_args(args) -> RunConfig:
    weight = None
    if getattr(args, "weight", None):
        weight = parse_weight(args.weight, args.n)
    return RunConfig(
        command=args.command,
        n=args.n,
        weight=weight,
        mu_samples=parse_mu(getattr(args, "mu", "auto"), args.n),
        fmt=args.format,
        cache_path=args.cache or default_cache_path(),
        parallelism=args.parallelism,
        term_bound=args.term_bound,
        with_hc=getattr(args, "hc", False),
        suite=getattr(args, "suite", None),
        element=getattr(args, "element", None),
    )


# ---------------------------------------------------------------------------
# commands; each returns (payload dict, text, exit status)

def _cached(cfg: RunConfig, command: str, compute):
    store = CacheStore(cfg.cache_path) if cfg.cache_path else None
    key = cache_key(command, cfg.n, cfg.weight or ())
    if store is not None:
        hit = store.get(key)
        if hit is not None:
            return hit
    value = compute()
    if store is not None:
        store.put(key, value)
    return value


def cmd_omega(cfg: RunConfig):
    rep = irrep(cfg.weight, cfg.n)
    omega = braided_casimir(rep)
    entries = [[format_element(x.coefficient(0)) for x in row] for row in omega.entries]
    payload = {"command": "omega", "lambda": list(cfg.weight), "n": cfg.n, "matrix": entries}
    text = "\n".join("[" + ", ".join(row) + "]" for row in entries)
    return payload, text, EXIT_OK


def cmd_sdet(cfg: RunConfig):
    def compute():
        D = shifted_determinant(irrep(cfg.weight, cfg.n), workers=cfg.parallelism)
        return D.to_json(with_hc=True)

    data = _cached(cfg, "sdet", compute)
    payload = {"command": "sdet", "n": cfg.n, "lambda": list(cfg.weight), "poly": data["poly"],
               "centrality_report": data["centrality_report"]}
    poly = UPoly.from_json(cfg.n, data["poly"])
    lines = [f"D(u) = {poly}", "central: " + ", ".join(f"u^{k}: {v}" for k, v in data["centrality_report"].items())]
    if cfg.with_hc:
        hcp = HCImagePoly.from_json(cfg.n, data["hc"])
        payload["hc"] = data["hc"]
        payload["hc_text"] = str(hcp)
        lines.append(f"chi(D(u)) = {hcp}")
        if cfg.n == 2:
            match = hcp == gl2_hc_formula("D", cfg.weight)
            payload["matches_gl2_formula"] = match
            lines.append(f"matches closed form: {match}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_charpoly(cfg: RunConfig):
    samples = None if cfg.mu_samples == "auto" else cfg.mu_samples

    def compute():
        res = charpoly_interpolate(cfg.weight, cfg.n, samples)
        return {
            "hc": res.hc.to_json(),
            "hc_text": str(res.hc),
            "used": [list(m) for m in res.used],
            "discarded": [list(m) for m in res.discarded],
        }

    data = compute() if samples is not None else _cached(cfg, "charpoly", compute)
    payload = {"command": "charpoly", "n": cfg.n, "lambda": list(cfg.weight), **data}
    text = f"chi(P(u)) = {data['hc_text']}\nsamples used: {len(data['used'])}, discarded: {len(data['discarded'])}"
    return payload, text, EXIT_OK


def cmd_hc(cfg: RunConfig):
    try:
        x = parse_element(cfg.element, cfg.n)
    except pbw.ParseError as exc:
        raise UsageError(str(exc)) from exc
    try:
        img = hc_image(x, check=True)
    except pbw.NotCentralError as exc:
        payload = {"command": "hc", "n": cfg.n, "element": element_to_json(x), "central": False}
        return payload, f"not central: {exc}", EXIT_FAIL
    names = [f"mu{k + 1}" for k in range(cfg.n)]
    payload = {"command": "hc", "n": cfg.n, "element": element_to_json(x), "central": True,
               "hc": img.to_json(), "hc_text": img.to_str(names)}
    return payload, f"chi = {img.to_str(names)}", EXIT_OK


def cmd_capelli(cfg: RunConfig):
    lam = tuple(c for c in cfg.weight if c > 0)
    if any(c < 0 for c in cfg.weight) or not lam:
        raise UsageError("capelli needs a nonzero partition")

    def compute():
        c = capelli_poly(lam, cfg.n)
        report = c.centrality_report()
        out = {"poly": c.to_json(), "centrality_report": {str(k): v for k, v in sorted(report.items())}}
        if all(report.values()):
            out["hc_text"] = str(upoly_hc_image(c))
            out["hc"] = upoly_hc_image(c).to_json()
        return out

    data = _cached(cfg, "capelli", compute)

    payload = {"command": "capelli", "n": cfg.n, "partition": list(lam), **{k: v for k, v in data.items() if k != "hc" or cfg.with_hc}}
    lines = [f"c(u) = {UPoly.from_json(cfg.n, data['poly'])}"]
    lines.append("central: " + ", ".join(f"u^{k}: {v}" for k, v in data["centrality_report"].items()))
    if cfg.with_hc and "hc_text" in data:
        lines.append(f"chi(c(u)) = {data['hc_text']}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_verify(cfg: RunConfig):
    try:
        results = run_suite(cfg.suite, cfg.n, cfg.parallelism)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reports = [r.to_json() for r in results]
    ok = all(r.passed for r in results)
    payload = {"command": "verify", "suite": cfg.suite, "n": cfg.n, "pass": ok, "reports": reports}
    lines = []
    for r in results:
        params = ", ".join(f"{k}={v}" for k, v in r.params.items())
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.check}({params})")
        if not r.passed and r.witness:
            lines.append(f"      witness: {json.dumps(r.witness, sort_keys=True)}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return payload, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def cmd_conjecture_scan(cfg: RunConfig, permute: bool = False):
    weights = [cfg.weight] if cfg.weight else [tuple([1, 1] + [0] * (cfg.n - 2)), tuple([2] + [0] * (cfg.n - 1))]
    scans = [conjecture_scan(w, cfg.n, permute=permute, workers=cfg.parallelism) for w in weights]
    payload = {"command": "conjecture-scan", "experimental": True, "n": cfg.n, "scans": scans}
    lines = ["experimental: evidence only, never affects the exit status"]
    for s in scans:
        lines.append(f"lambda={tuple(s['lambda'])} dim={s['dim']} central per u-degree: {s['default_basis']}")
    return payload, "\n".join(lines), EXIT_OK


COMMANDS = {
    "omega": cmd_omega,
    "sdet": cmd_sdet,
    "charpoly": cmd_charpoly,
    "hc": cmd_hc,
    "capelli": cmd_capelli,
    "verify": cmd_verify,
}


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def run(cfg: RunConfig, permute: bool = False):
    """Execute a configuration; returns (exit status, payload, text)."""
    previous = pbw.get_term_bound()
    pbw.set_term_bound(cfg.term_bound)
    try:
        if cfg.command == "conjecture-scan":
            payload, text, status = cmd_conjecture_scan(cfg, permute)
        else:
            if cfg.command in ("omega", "sdet", "charpoly", "capelli") and cfg.weight is None:
                raise UsageError("--lambda is required")
            payload, text, status = COMMANDS[cfg.command](cfg)
    finally:
        pbw.set_term_bound(previous)
    return status, payload, text


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(args)
        status, payload, text = run(cfg, permute=getattr(args, "permute", False))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TensorBoundExceeded, WorkBoundExceeded, pbw.TermBoundExceeded) as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DegenerateSamplesError as exc:
        print(f"interpolation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True, default=_json_default))
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``fsbasis <command> [options]``.

Exit status: 0 success, 1 negative verdict or golden mismatch, 2 invalid
input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import dataclass, field

from . import __version__, checks
from .chains import chain_partition, factorize, max_antichain
from .conditions import find_dc_violation, find_ic_violation, leading_term
from .core import (
    AlgebraParams,
    HighestWeight,
    InvalidInput,
    InvariantViolation,
    Monomial,
    augment,
)
from .enumeration import (
    brute_force_dimensions,
    enumerate_basis,
    f_parameter,
    graded_dimensions,
    mu_monomial,
)
from .relations import orbit_dimension_formula, verify_relation_support

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2, 3


@dataclass
class Outcome:
    payload: dict
    text: list[str]
    header: list[str]
    rows: list[list] = field(default_factory=list)
    status: int = EXIT_OK
    golden_line: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _params(ns) -> AlgebraParams:
    return AlgebraParams(ns.l, ns.m)


def _weight(ns, params: AlgebraParams) -> HighestWeight:
    if ns.weight is None:
        w = HighestWeight.fundamental(params.ell, 0)
    else:
        w = HighestWeight.parse(ns.weight)
    w.check(params)
    return w


def _config(ns, params, weight=None) -> dict:
    out = {"ell": params.ell, "m": params.m}
    if weight is not None:
        out["weight"] = list(weight.multiplicities)
    return out


def _monomial(ns, params) -> Monomial:
    if ns.monomial is None:
        raise InvalidInput("--monomial is required")
    p = Monomial.parse(ns.monomial)
    params.check_monomial(p)
    if not p.is_ordinary():
        raise InvalidInput("monomial factors must have negative degree")
    return p


def _golden_key(params: AlgebraParams, weight: HighestWeight) -> str:
    return f"{params.ell},{params.m},{weight}"


# --- commands ---------------------------------------------------------------


def cmd_check(ns) -> Outcome:
    params = _params(ns)
    w = _weight(ns, params)
    p = _monomial(ns, params)
    dc_w = find_dc_violation(p, w.level)
    ic_w = find_ic_violation(p, w)
    aug_w = find_dc_violation(augment(p, params, w), w.level)
    verdict = aug_w is None
    if verdict != (dc_w is None and ic_w is None):
        raise InvariantViolation(f"augmented DC disagrees with DC and IC on {p}")
    witness = None
    if dc_w is not None:
        witness = {"kind": "dc", **dc_w.to_dict()}
    elif ic_w is not None:
        witness = {"kind": "ic", **ic_w.to_dict()}
    payload = {
        "config": _config(ns, params, w),
        "monomial": str(p),
        "dc": dc_w is None,
        "ic": ic_w is None,
        "verdict": verdict,
        "witness": witness,
    }
    text = [f"dc: {str(payload['dc']).lower()}", f"ic: {str(payload['ic']).lower()}",
            f"verdict: {str(verdict).lower()}"]
    if witness:
        path = "(" + ",".join(f"({i},{j})" for i, j in witness["path"]) + ")"
        text.append(f"witness: kind={witness['kind']} r={witness['r']} s={witness['s']} "
                    f"path={path} lhs={witness['lhs']} bound={witness['bound']}")
    row = [str(p), payload["dc"], payload["ic"], verdict]
    row += [witness[k] for k in ("kind", "r", "s", "lhs", "bound")] if witness else [""] * 5
    return Outcome(payload, text, ["monomial", "dc", "ic", "verdict", "kind", "r", "s", "lhs", "bound"],
                   [row], EXIT_OK if verdict else EXIT_NEGATIVE)


def cmd_enumerate(ns) -> Outcome:
    params = _params(ns)
    w = _weight(ns, params)
    degrees = [{"n": n, "monomials": [str(p) for p in ps]} for n, ps in enumerate_basis(params, w, ns.n_max)]
    text = [f"{d['n']}: " + " | ".join(d["monomials"]) for d in degrees]
    rows = [[d["n"], mono] for d in degrees for mono in d["monomials"]]
    payload = {"config": _config(ns, params, w), "n_max": ns.n_max, "degrees": degrees}
    return Outcome(payload, text, ["n", "monomial"], rows)


def cmd_character(ns) -> Outcome:
    params = _params(ns)
    w = _weight(ns, params)
    series = graded_dimensions(params, w, ns.n_max)
    payload = {"config": _config(ns, params, w), "n_max": ns.n_max, "series": series.to_list(),
               "oracle": None, "oracle_agrees": None}
    if ns.oracle:
        oracle = brute_force_dimensions(params, w, ns.n_max)
        payload["oracle"] = oracle.to_list()
        payload["oracle_agrees"] = oracle == series
        if oracle != series:
            raise InvariantViolation(f"enumeration {series} differs from brute force {oracle}")
    rows = [[n, c] for n, c in enumerate(series)]
    return Outcome(payload, [str(series)], ["n", "dimension"], rows,
                   golden_line=f"{_golden_key(params, w)} : {series}")


def cmd_chains(ns) -> Outcome:
    params = _params(ns)
    p = _monomial(ns, params)
    width, anti = max_antichain(p)
    chains = chain_partition(p, max(width, 1), ns.method) or []
    payload = {"monomial": str(p), "width": width, "antichain": str(anti),
               "chains": [str(c.monomial()) for c in chains]}
    text = [f"width: {width}", f"antichain: {anti}"] + [f"chain: {c}" for c in payload["chains"]]
    return Outcome(payload, text, ["index", "chain"], [[a, c] for a, c in enumerate(payload["chains"])])


def cmd_factor(ns) -> Outcome:
    params = _params(ns)
    w = _weight(ns, params)
    p = _monomial(ns, params)
    fact = factorize(p, params, w, ns.method)
    payload = {"config": _config(ns, params, w), "monomial": str(p), "admissible": fact is not None,
               "factors": fact.to_list() if fact else None}
    if fact is None:
        return Outcome(payload, ["not admissible"], ["tag", "monomial"], [], EXIT_NEGATIVE)
    text = [f"{d['tag']}: {d['monomial']}" for d in payload["factors"]]
    return Outcome(payload, text, ["tag", "monomial"], [[d["tag"], d["monomial"]] for d in payload["factors"]])


def cmd_leading_term(ns) -> Outcome:
    params = _params(ns)
    if ns.rows is None or ns.cols is None or ns.n is None:
        raise InvalidInput("--rows, --cols and --n are required")
    k = len(ns.rows) - 1
    lt = leading_term(ns.rows, ns.cols, ns.n, k, params)
    payload = {"rows": list(ns.rows), "cols": list(ns.cols), "n": ns.n, "k": k, "monomial": str(lt)}
    return Outcome(payload, [str(lt)], ["monomial"], [[str(lt)]])


def cmd_relations_verify(ns) -> Outcome:
    params = _params(ns)
    k = ns.k if ns.k is not None else _weight(ns, params).level
    report = verify_relation_support(params, k)
    labels = [r.to_dict() for r in report]
    payload = {"config": _config(ns, params), "k": k, "dim": len(report),
               "expected_dim": orbit_dimension_formula(params, k), "labels": labels}
    text = [f"dim: {len(report)} (expected {payload['expected_dim']})"]
    rows = []
    for r in report:
        text.append(f"rows={','.join(map(str, r.rows))} cols={','.join(map(str, r.cols))} "
                    f"support={r.support_ok} positive={r.positive_ok} leading={r.leading_term_ok}")
        rows.append([",".join(map(str, r.rows)), ",".join(map(str, r.cols)), r.dim,
                     r.support_ok, r.positive_ok, r.leading_term_ok])
    ok = all(r.ok for r in report) and len(report) == payload["expected_dim"]
    return Outcome(payload, text, ["rows", "cols", "dim", "support_ok", "positive_ok", "leading_term_ok"],
                   rows, EXIT_OK if ok else EXIT_INVARIANT)


def cmd_mu(ns) -> Outcome:
    params = _params(ns)
    w = _weight(ns, params)
    f = f_parameter(params)
    mu = mu_monomial(params, w)
    payload = {"config": _config(ns, params, w), "f": f, "mu": str(mu)}
    return Outcome(payload, [f"f: {f}", f"mu: {mu}"], ["f", "mu"], [[f, str(mu)]])


def cmd_selfcheck(ns) -> Outcome:
    results = checks.selfcheck()
    ok = all(r.passed for r in results)
    payload = {"checks": [r.to_dict() for r in results], "passed": ok}
    text = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)" for r in results]
    rows = [[r.name, r.passed, r.cases] for r in results]
    return Outcome(payload, text, ["name", "passed", "cases"], rows, EXIT_OK if ok else EXIT_INVARIANT)


COMMANDS = {
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "character": cmd_character,
    "chains": cmd_chains,
    "factor": cmd_factor,
    "leading-term": cmd_leading_term,
    "relations-verify": cmd_relations_verify,
    "mu": cmd_mu,
    "selfcheck": cmd_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fsbasis", description="Difference-condition bases for affine sl(ell+1) modules.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--l", type=int, default=1, help="rank ell")
        p.add_argument("--m", type=int, default=1, help="index of the cominuscule node")
        p.add_argument("--weight", help="multiplicities k0,k1,...,kl (default L0)")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--golden", metavar="PATH", help="compare the output with a stored file")
        p.add_argument("--manifest", metavar="PATH", help="write a run manifest here")
        if name in ("check", "chains", "factor"):
            p.add_argument("--monomial", help='e.g. "x[1,2](-2)^1; x[1,1](-1)^2"')
        if name in ("chains", "factor"):
            p.add_argument("--method", choices=["inductive", "matching"], default="inductive")
        if name in ("enumerate", "character"):
            p.add_argument("--n-max", dest="n_max", type=int, default=10)
        if name == "character":
            p.add_argument("--oracle", action="store_true", help="also run the brute-force count")
        if name == "leading-term":
            p.add_argument("--rows", type=_int_list)
            p.add_argument("--cols", type=_int_list)
            p.add_argument("--n", type=int)
        if name == "relations-verify":
            p.add_argument("--k", type=int, help="level (default: level of --weight)")
    return parser


def render(out: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.header)
        writer.writerows(out.rows)
        return buf.getvalue()
    return "\n".join(out.text) + "\n"


def manifest(ns) -> dict:
    config = {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(vars(ns).items())
              if k not in ("golden", "manifest")}
    blob = json.dumps(config, sort_keys=True).encode()
    return {"version": __version__, "command": ns.command, "config": config,
            "config_sha256": hashlib.sha256(blob).hexdigest()}


def _golden_matches(out: Outcome, rendered: str, path: str) -> bool:
    with open(path, encoding="utf-8") as fh:
        stored = fh.read()
    line = out.golden_line
    if line is None:
        return stored == rendered
    key, _, want = line.partition(" : ")
    for entry in stored.splitlines():
        k, sep, v = entry.partition(":")
        if sep and k.strip() == key:
            got, exp = want.split(), v.split()
            return got[: len(exp)] == exp[: len(got)]
    return False


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        out = COMMANDS[ns.command](ns)
        rendered = render(out, ns.format)
        stdout.write(rendered)
        if ns.manifest:
            with open(ns.manifest, "w", encoding="utf-8") as fh:
                json.dump(manifest(ns), fh, sort_keys=True, indent=2)
                fh.write("\n")
        if ns.golden and not _golden_matches(out, rendered, ns.golden):
            stderr.write(f"golden mismatch against {ns.golden}\n")
            return EXIT_NEGATIVE
        return out.status
    except InvariantViolation as exc:
        stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except (InvalidInput, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())

"""Command-line front end: reproducible generation, analysis, and verification.

Five commands: gen-payoff, transform, analyze, verify, simulate.  Every
output file embeds the tool version, the full flag configuration, the
seed, and content hashes of all file inputs; nothing time-dependent is
written, so identical invocations produce byte-identical files.  The
verify command exits 0 exactly when every theorem-backed check in the
chosen suite passes; trend quantities are reported but never gate.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
from math import factorial

import numpy as np

from . import __version__
from .cayley import SymmetricSet, block_operator, bound_violations, dense_operator, symmetrize
from .errors import DegenerateError
from .fairness import (
    additive_gap,
    fairness_report,
    lower_bound_report,
    nested_stabilizer_instance,
    uncertainty_bound,
    upper_bound_report,
)
from .fourier import (
    PayoffFn,
    FourierSpectrum,
    degree,
    inverse,
    schatten_summary,
    transform,
    uncertainty_check,
)
from .intersecting import intersection_profile, stabilizer_set, verify_indicator_degree
from .partitions import dimension, partitions_of
from .payoffs import (
    CfmmModel,
    JuntaTerm,
    LiquidationModel,
    cfmm_payoff,
    indicator_payoff,
    junta_payoff,
    liquidation_payoff,
    random_payoff,
)
from .permutations import Permutation
from .sets import OrderingSet
from .sequencing import (
    VoteProfile,
    condorcet_stats,
    majority_graph,
    simulate,
    valid_orderings,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def _hash_file(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValueError(f"{what} file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"malformed {what} file {path}: {exc.msg} at line {exc.lineno} column {exc.colno}"
        )


def _metadata(args: argparse.Namespace, inputs: dict[str, str]) -> dict:
    # Destination paths are routing, not analysis configuration; leaving
    # them out keeps file content independent of where it is written.
    skip = {"func", "out", "csv"}
    config = {
        k: _jsonable(v)
        for k, v in sorted(vars(args).items())
        if k not in skip and v is not None
    }
    return {
        "tool": "snfair",
        "tool_version": __version__,
        "command": args.command,
        "config": config,
        "input_hashes": {label: _hash_file(path) for label, path in inputs.items()},
    }


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(rows: list[dict], path: str) -> None:
    if not rows:
        return
    keys = list(rows[0].keys())
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=keys)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _jsonable(v) for k, v in row.items()})


def _parse_deltas(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse trade sizes {text!r}; expected e.g. 1,2,-1,-2")


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.split(","):
        try:
            i, j = chunk.split(":")
            pairs.append((int(i), int(j)))
        except ValueError:
            raise ValueError(f"cannot parse constraint {chunk!r}; expected slot:item")
    return tuple(pairs)


def _spectrum_rows(spec: FourierSpectrum) -> list[dict]:
    summary = schatten_summary(spec)
    rows = []
    for shape, mat in spec.blocks.items():
        sv = summary.per_block[shape]
        rows.append(
            {
                "lambda": "+".join(str(p) for p in shape),
                "dim": dimension(shape),
                "frobenius": float(np.linalg.norm(mat)),
                "sigma_max": float(sv[0]) if sv.size else 0.0,
                "sigma_sum": float(sv.sum()),
            }
        )
    return rows


# ---------------------------------------------------------------- commands


def cmd_gen_payoff(args: argparse.Namespace) -> int:
    inputs = {}
    if args.model == "cfmm":
        if args.deltas is None:
            raise ValueError("cfmm model needs --deltas")
        model = CfmmModel(
            deltas=_parse_deltas(args.deltas),
            p0=args.p0,
            gamma=args.gamma,
            beta=args.beta,
        )
        payoff = cfmm_payoff(model, max_n=args.max_n)
    elif args.model == "liquidation":
        if args.k is None or args.c is None:
            raise ValueError("liquidation model needs --k and --c")
        payoff = liquidation_payoff(
            LiquidationModel(k=args.k, c=args.c, p0=args.p0), max_n=args.max_n
        )
    elif args.model == "junta":
        if args.n is None or args.pairs is None:
            raise ValueError("junta model needs --n and --pairs")
        term = JuntaTerm(constraints=_parse_pairs(args.pairs), coefficient=args.coeff)
        payoff = junta_payoff([term], args.n, max_n=args.max_n)
    elif args.model == "indicator":
        if args.set is None:
            raise ValueError("indicator model needs --set")
        inputs["set"] = args.set
        members = OrderingSet.from_dict(_load_json(args.set, "ordering set"))
        payoff = indicator_payoff(members)
    elif args.model == "random":
        if args.n is None:
            raise ValueError("random model needs --n")
        payoff = random_payoff(
            args.n, seed=args.seed, dist=args.dist, nonzero=args.nonzero,
            max_n=args.max_n,
        )
    else:  # pragma: no cover - argparse already restricts choices
        raise ValueError(f"unknown model {args.model!r}")

    payload = payoff.to_dict()
    payload["metadata"] = _metadata(args, inputs)
    _emit(payload, args.out)
    vals = payoff.values
    print(
        f"n={payoff.n} orderings={factorial(payoff.n)} "
        f"min={vals.min():.6g} max={vals.max():.6g} mean={vals.mean():.6g}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    payoff = PayoffFn.from_dict(_load_json(args.payoff, "payoff"))
    spec = transform(payoff, max_n=args.max_n)
    payload = spec.to_dict()
    payload["metadata"] = _metadata(args, {"payoff": args.payoff})
    _emit(payload, args.out)
    if args.csv:
        _emit_csv(_spectrum_rows(spec), args.csv)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    payoff = PayoffFn.from_dict(_load_json(args.payoff, "payoff"))
    members = OrderingSet.from_dict(_load_json(args.set, "ordering set"))
    if payoff.n != members.n:
        raise ValueError(f"payoff is on S_{payoff.n} but the set lives in S_{members.n}")

    base = fairness_report(payoff, members, max_n=args.max_n)
    profile = intersection_profile(members)
    spec = transform(payoff, max_n=args.max_n)
    summary = schatten_summary(spec)
    report = {
        "n": payoff.n,
        "set_size": len(members),
        "fairness": {
            "max_value": base.max_value,
            "mean_value": base.mean_value,
            "additive_gap": base.additive_gap,
            "multiplicative_gap": base.multiplicative_gap,
            "conditional_gap": base.conditional_gap,
            "classification": base.classification,
            "trivial_bound": base.trivial_bound,
        },
        "degree": degree(payoff, tol=args.tol, spectrum=spec),
        "intersection": {
            "t_max": profile.t_max,
            "common_pairs": [list(p) for p in profile.common_pairs],
            "size_gate": profile.size_gate,
        },
        "schatten": {"s1": summary.s1, "sinf": summary.sinf},
    }
    restricted_max = base.max_value if len(members) else 0.0
    if restricted_max > 0.0:
        ub = uncertainty_bound(payoff, members, max_n=args.max_n)
        upper = upper_bound_report(payoff, members, max_n=args.max_n)
        lower = lower_bound_report(payoff, members, max_n=args.max_n)
        report["uncertainty_bound"] = {
            "bound": ub.bound,
            "additive_gap": ub.additive_gap,
            "slack": ub.slack,
        }
        report["upper_regime"] = {
            "degree": upper.degree,
            "t_max": upper.t_max,
            "applicable": upper.applicable,
            "schatten_ratio": upper.schatten_ratio,
            "dim_sq_sum": upper.dim_sq_sum,
            "bound_value": upper.bound_value,
        }
        report["lower_regime"] = {
            "degree": lower.degree,
            "t_max": lower.t_max,
            "applicable": lower.applicable,
            "gap_ratio": lower.gap_ratio,
            "rhs_coefficient": lower.rhs_coefficient,
            "implied_constant": lower.implied_constant,
        }
    else:
        report["uncertainty_bound"] = None
        report["upper_regime"] = None
        report["lower_regime"] = None
        report["note"] = "restriction is identically zero; spectral bounds degenerate"
    report["metadata"] = _metadata(args, {"payoff": args.payoff, "set": args.set})
    _emit(report, args.out)
    if args.csv:
        _emit_csv(_spectrum_rows(spec), args.csv)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    inputs = {}
    if args.votes:
        inputs["votes"] = args.votes
        votes = VoteProfile.from_dict(_load_json(args.votes, "votes"))
    else:
        votes = simulate(
            n_tx=args.n_tx,
            n_validators=args.validators,
            latency_model=args.latency,
            seed=args.seed,
        )
    graph = majority_graph(votes)
    admissible = valid_orderings(graph, max_tx=args.max_n)
    stats = condorcet_stats(graph)
    profile = intersection_profile(admissible)
    payload = admissible.to_dict()
    payload["votes"] = votes.to_dict()
    payload["stats"] = {
        "num_sccs": stats.num_sccs,
        "largest_scc": stats.largest_scc,
        "has_cycle": stats.has_cycle,
        "edges": [list(e) for e in sorted(graph.edges)],
        "sccs": [list(c) for c in graph.sccs],
        "t_max": profile.t_max,
        "common_pairs": [list(p) for p in profile.common_pairs],
        "set_size": len(admissible),
    }
    payload["metadata"] = _metadata(args, inputs)
    _emit(payload, args.out)
    print(
        f"n_tx={votes.n_tx} validators={len(votes.validators)} "
        f"admissible={len(admissible)} sccs={stats.num_sccs} "
        f"largest_scc={stats.largest_scc} cycle={stats.has_cycle} t_max={profile.t_max}",
        file=sys.stderr,
    )
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _corpus_payoffs(n: int, seed: int, max_n: int) -> dict[str, PayoffFn]:
    """Deterministic generator-family corpus used by the verify suites."""
    sizes = []
    mag = 1
    for i in range(n):
        sizes.append(float(mag) if i % 2 == 0 else float(-mag))
        if i % 2 == 1:
            mag += 1
    corpus = {
        "cfmm": cfmm_payoff(
            CfmmModel(deltas=tuple(sizes), p0=100.0, gamma=0.001, beta=1.0),
            max_n=max_n,
        ),
        "junta_k1": junta_payoff([JuntaTerm(((1, 1),))], n, max_n=max_n),
        "junta_k2": junta_payoff([JuntaTerm(((1, 1), (2, 2)))], n, max_n=max_n),
        "random_a": random_payoff(n, seed=seed, max_n=max_n),
        "random_b": random_payoff(n, seed=seed + 1, max_n=max_n),
    }
    if n % 2 == 0 and n >= 4:
        corpus["liquidation"] = liquidation_payoff(
            LiquidationModel(k=n // 2, c=1), max_n=max_n
        )
    return corpus


def _corpus_sets(n: int, seed: int, max_n: int) -> dict[str, OrderingSet]:
    sets = {
        "full_group": OrderingSet.full_group(n),
        "stabilizer_t1": stabilizer_set(n, [(1, 1)]),
        "stabilizer_t2": stabilizer_set(n, [(1, 1), (2, 2)]),
    }
    if n <= 8:
        votes = simulate(n, 5, "iid_shuffle", seed=seed)
        sets["fair_ordering_iid"] = valid_orderings(majority_graph(votes), max_tx=max_n)
        if n >= 3:
            votes = simulate(n, n, "adversarial_cycle")
            sets["fair_ordering_cycle"] = valid_orderings(
                majority_graph(votes), max_tx=max_n
            )
    return sets


def _suite_roundtrip(n: int, seed: int, tol: float, max_n: int):
    cases = {}
    for i in range(5):
        cases[f"uniform_{i}"] = random_payoff(n, seed=seed + i, max_n=max_n)
    cases["sparse"] = random_payoff(n, seed=seed, dist="sparse", nonzero=3, max_n=max_n)
    size = factorial(n)
    cases["point_mass"] = PayoffFn(n, np.eye(size)[0])
    cases["constant"] = PayoffFn(n, np.ones(size))
    rows = []
    passed = True
    for label, f in cases.items():
        spec = transform(f, max_n=max_n)
        back = inverse(spec, max_n=max_n)
        err = float(np.abs(back.values - f.values).max())
        energy = float((f.values**2).sum())
        spectral = sum(
            dimension(s) * float(np.linalg.norm(m)) ** 2 for s, m in spec.blocks.items()
        ) / size
        rel = abs(energy - spectral) / energy
        ok = err <= tol and rel <= tol
        passed &= ok
        rows.append(
            {
                "payoff": label,
                "max_abs_error": err,
                "parseval_rel_error": rel,
                "ok": ok,
            }
        )
    return passed, {"cases": rows}, rows


def _suite_uncertainty(n: int, seed: int, tol: float, max_n: int):
    rows = []
    passed = True
    order = factorial(n)
    cases = {f"uniform_{i}": random_payoff(n, seed=seed + i, max_n=max_n) for i in range(100)}
    cases.update(_corpus_payoffs(n, seed, max_n))
    for label, f in cases.items():
        check = uncertainty_check(f, max_n=max_n)
        passed &= check.holds
        rows.append(
            {
                "payoff": label,
                "support_ratio": check.support_ratio,
                "spread_ratio": check.spread_ratio,
                "product": check.product,
                "holds": check.holds,
            }
        )
    for label, f in {
        "point_mass": PayoffFn(n, np.eye(order)[0]),
        "constant": PayoffFn(n, np.ones(order)),
    }.items():
        check = uncertainty_check(f, max_n=max_n)
        equal = abs(check.product - order) <= 1e-12 * order
        passed &= check.holds and equal
        rows.append(
            {
                "payoff": label,
                "support_ratio": check.support_ratio,
                "spread_ratio": check.spread_ratio,
                "product": check.product,
                "holds": check.holds and equal,
            }
        )
    return passed, {"cases": rows}, rows


def _random_symmetric_set(n: int, rng: np.random.Generator) -> SymmetricSet:
    size = factorial(n)
    picks = rng.choice(size, size=min(4, size), replace=False)
    return symmetrize(OrderingSet.from_ranks(n, picks))


def _suite_eigenvalue(n: int, seed: int, tol: float, max_n: int):
    rng = np.random.default_rng(seed)
    sets = {"identity": SymmetricSet(n, (0,))}
    transpositions = [
        Permutation.transposition(n, i, j).rank()
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    sets["transpositions"] = SymmetricSet(n, tuple(sorted(transpositions)))
    for i in range(3):
        sets[f"random_{i}"] = _random_symmetric_set(n, rng)

    rows = []
    passed = True
    for label, conn in sets.items():
        if n <= 4:
            dense = dense_operator(conn)
            brute = np.sort(np.linalg.eigvalsh(dense))
            blockwise = np.sort(
                np.concatenate(
                    [
                        np.repeat(
                            np.linalg.eigvalsh(block_operator(conn, s)), dimension(s)
                        )
                        for s in partitions_of(n)
                    ]
                )
            )
            residual = float(np.abs(brute - blockwise).max())
            consistent = residual <= 1e-8
        else:
            residual = None
            consistent = True
        normalized_bad = bound_violations(conn, normalized=True)
        raw_bad = bound_violations(conn, normalized=False)
        satisfied = "normalized" if not normalized_bad else (
            "unnormalized" if not raw_bad else "neither"
        )
        ok = consistent and satisfied != "neither"
        passed &= ok
        rows.append(
            {
                "set": label,
                "size": len(conn),
                "block_residual": residual,
                "normalized_violations": len(normalized_bad),
                "unnormalized_violations": len(raw_bad),
                "bound_satisfied_by": satisfied,
                "ok": ok,
            }
        )
    return passed, {"cases": rows}, rows


def _suite_indicator_degree(n: int, seed: int, tol: float, max_n: int):
    rng = np.random.default_rng(seed)
    sets: dict[str, OrderingSet] = {"full_group": OrderingSet.full_group(n)}
    for t in range(1, min(3, n - 1) + 1):
        sets[f"pin_identity_t{t}"] = stabilizer_set(n, [(i, i) for i in range(1, t + 1)])
        sets[f"pin_reversal_t{t}"] = stabilizer_set(
            n, [(i, n + 1 - i) for i in range(1, t + 1)]
        )
        for rep in range(4):
            slots = rng.choice(n, size=t, replace=False) + 1
            items = rng.choice(n, size=t, replace=False) + 1
            sets[f"pin_random_t{t}_{rep}"] = stabilizer_set(
                n, list(zip(slots.tolist(), items.tolist()))
            )
    votes = simulate(n, 5, "iid_shuffle", seed=seed)
    sets["fair_ordering_iid"] = valid_orderings(majority_graph(votes), max_tx=max_n)

    rows = []
    passed = True
    for label, members in sets.items():
        report = verify_indicator_degree(members, tol=tol)
        passed &= report.claim_holds
        rows.append(
            {
                "set": label,
                "size": len(members),
                "t_max": report.t_max,
                "degree": report.deg_indicator,
                "size_gate": report.size_gate,
                "claim_holds": report.claim_holds,
            }
        )
    return passed, {"cases": rows}, rows


def _suite_claim1(n: int, seed: int, tol: float, max_n: int):
    rows = []
    passed = True
    for p_label, f in _corpus_payoffs(n, seed, max_n).items():
        for s_label, members in _corpus_sets(n, seed, max_n).items():
            if len(members) == 0:
                continue
            restricted = f.values[list(members.members)]
            if float(np.abs(restricted).max()) == 0.0:
                rows.append(
                    {
                        "payoff": p_label,
                        "set": s_label,
                        "additive_gap": 0.0,
                        "bound": None,
                        "slack": None,
                        "applicable": None,
                        "dim_sq_sum": None,
                        "ok": True,
                    }
                )
                continue
            ub = uncertainty_bound(f, members, max_n=max_n)
            upper = upper_bound_report(f, members, max_n=max_n)
            ok = ub.slack >= -tol
            passed &= ok
            rows.append(
                {
                    "payoff": p_label,
                    "set": s_label,
                    "additive_gap": ub.additive_gap,
                    "bound": ub.bound,
                    "slack": ub.slack,
                    "applicable": upper.applicable,
                    "dim_sq_sum": upper.dim_sq_sum,
                    "ok": ok,
                }
            )
    return passed, {"cases": rows}, rows


def _suite_claim2(n: int, seed: int, tol: float, max_n: int):
    if n < 4:
        raise ValueError("claim2 suite needs n >= 4 for a non-degenerate instance")
    instances = [(1, 3)]
    if n >= 5:
        instances.append((2, 4))
    rows = []
    passed = True
    for outer, inner in instances:
        f, members = nested_stabilizer_instance(n, outer, inner)
        report = lower_bound_report(f, members, max_n=max_n)
        finite_positive = (
            report.implied_constant is not None
            and np.isfinite(report.implied_constant)
            and report.implied_constant > 0.0
        )
        ok = report.applicable and finite_positive
        passed &= ok
        rows.append(
            {
                "instance": f"outer{outer}_inner{inner}",
                "degree": report.degree,
                "t_max": report.t_max,
                "applicable": report.applicable,
                "gap_ratio": report.gap_ratio,
                "implied_constant": report.implied_constant,
                "ok": ok,
            }
        )
    return passed, {"cases": rows}, rows


_SUITES = {
    "roundtrip": _suite_roundtrip,
    "uncertainty": _suite_uncertainty,
    "eigenvalue": _suite_eigenvalue,
    "indicator_degree": _suite_indicator_degree,
    "claim1": _suite_claim1,
    "claim2": _suite_claim2,
}


def cmd_verify(args: argparse.Namespace) -> int:
    suite = _SUITES[args.suite]
    passed, body, rows = suite(args.n, args.seed, args.tol, args.max_n)
    report = {
        "suite": args.suite,
        "n": args.n,
        "passed": passed,
        **body,
        "metadata": _metadata(args, {}),
    }
    _emit(report, args.out)
    if args.csv:
        _emit_csv(rows, args.csv)
    print(
        f"suite={args.suite} n={args.n} cases={len(rows)} "
        f"passed={'yes' if passed else 'NO'}",
        file=sys.stderr,
    )
    return EXIT_OK if passed else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- parser


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    parser.add_argument(
        "--tol", type=float, default=1e-9, help="numeric tolerance (default 1e-9)"
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=8,
        dest="max_n",
        help="capacity guard on the group size (default 8)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snfair",
        description="Ordering-fairness analysis on the symmetric group",
    )
    parser.add_argument("--version", action="version", version=f"snfair {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-payoff", help="generate a payoff file from a model")
    p.add_argument(
        "--model",
        required=True,
        choices=["cfmm", "liquidation", "junta", "indicator", "random"],
    )
    p.add_argument("--deltas", help="cfmm trade sizes, comma separated")
    p.add_argument("--p0", type=float, default=100.0, help="initial price")
    p.add_argument("--gamma", type=float, default=0.001, help="price impact per unit")
    p.add_argument("--beta", type=float, default=1.0, help="extraction coefficient")
    p.add_argument("--k", type=int, help="liquidation half-count of trades")
    p.add_argument("--c", type=int, help="liquidation depth")
    p.add_argument("--n", type=int, help="group size for junta/random models")
    p.add_argument("--pairs", help="junta constraints as slot:item, comma separated")
    p.add_argument("--coeff", type=float, default=1.0, help="junta term coefficient")
    p.add_argument("--set", help="ordering set file for the indicator model")
    p.add_argument(
        "--dist", choices=["uniform01", "sparse"], default="uniform01",
        help="random payoff distribution",
    )
    p.add_argument("--nonzero", type=int, help="support size for sparse payoffs")
    _add_common(p)
    p.set_defaults(func=cmd_gen_payoff)

    p = sub.add_parser("transform", help="Fourier-transform a payoff file")
    p.add_argument("--payoff", required=True, help="payoff JSON file")
    p.add_argument("--csv", help="also write per-block stats as CSV")
    _add_common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("analyze", help="fairness analysis of a payoff over a set")
    p.add_argument("--payoff", required=True, help="payoff JSON file")
    p.add_argument("--set", required=True, help="ordering set JSON file")
    p.add_argument("--csv", help="also write per-block stats as CSV")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--n", type=int, default=4, help="group size (default 4)")
    p.add_argument("--csv", help="also write per-case rows as CSV")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="votes -> majority graph -> admissible set")
    p.add_argument("--votes", help="vote profile JSON file (overrides generation)")
    p.add_argument(
        "--latency",
        choices=["iid_shuffle", "adversarial_cycle"],
        default="iid_shuffle",
        help="latency model for generated profiles",
    )
    p.add_argument("--n-tx", type=int, default=4, dest="n_tx", help="transaction count")
    p.add_argument("--validators", type=int, default=5, help="validator count")
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

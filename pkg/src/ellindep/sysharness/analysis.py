"""Per-prime envelope analysis and the cross-prime constancy checks."""

from __future__ import annotations

import json
from collections import Counter

from .. import __version__
from ..errors import EllIndepError, SchemaError
from ..formchar import formal_character
from ..lierank import LieFactorDescriptor, algebraic_group_rank, an_counts, total_rank
from ..nori.cartan import identify_type
from ..nori.groups import order_ell_elements
from ..nori.lie import lie_algebra_of
from ..nori.thresholds import DEFAULT, Thresholds
from ..nori.weights import weights_on_ambient
from .bundle import SystemBundle


def _annotate(exc: EllIndepError, ell: int, stage: str):
    msg = f"[sysharness ell={ell} stage={stage}] {exc}"
    if hasattr(exc, "cap"):
        return type(exc)(exc.cap, msg)
    return type(exc)(msg)


def analyze_group(G, seed: int = 0, mode: str = "auto", thresholds: Thresholds = DEFAULT):
    """Envelope pipeline on a single MatrixGroup; JSON-ready report."""
    ell, n = G.ell, G.n
    stage = "order-ell"
    try:
        U = order_ell_elements(G, mode, thresholds, seed)
        stage = "lie-closure"
        s = lie_algebra_of(U.elements, ell, n)
        stage = "identify-type"
        t = identify_type(s, seed, thresholds)
        stage = "weights"
        w = weights_on_ambient(s, t, thresholds)
        stage = "formal-character"
        fc = formal_character(w.weight_matrix, n)
    except EllIndepError as exc:
        raise _annotate(exc, ell, stage) from exc
    factors = [LieFactorDescriptor(f["type"], f["twist"], f["f"], ell) for f in t.factors]
    rr = total_rank(factors)
    return {
        "ell": ell,
        "complete": U.complete,
        "enumeration": "exhaustive" if U.complete else "scan",
        "realization": "lie-algebra",
        "unipotent_count": len(U.elements),
        "envelope": t.summary(),
        "weight_matrix": [list(map(int, r)) for r in w.weight_matrix],
        "formal_character": fc.to_json(),
        "factors": [d.to_json() for d in factors],
        "rank_report": rr.to_json(),
        "an_counts": an_counts(factors),
        "rank_matches_envelope": rr.total_rank == algebraic_group_rank(factors) == t.rank,
    }


def analyze_prime(b: SystemBundle, ell: int, seed: int = 0, mode: str = "auto", thresholds: Thresholds = DEFAULT):
    """Run the envelope pipeline on the bundle's group at one prime."""
    if ell not in b.primes:
        raise SchemaError(f"prime {ell} is not part of bundle {b.label!r}")
    try:
        G = b.group(ell)
    except EllIndepError as exc:
        raise _annotate(exc, ell, "group") from exc
    return analyze_group(G, seed, mode, thresholds)


def _canonical(v):
    return json.dumps(v, sort_keys=True)


def _offenders(per, key):
    """Primes whose value deviates from the most common one (ties: the value at the smallest prime)."""
    vals = [(r["ell"], _canonical(key(r))) for r in per]
    counts = Counter(v for _, v in vals)
    top = max(counts.values())
    majority = next(v for _, v in vals if counts[v] == top)
    return [ell for ell, v in vals if v != majority]


def check_independence(
    b: SystemBundle, seed: int = 0, mode: str = "auto", thresholds: Thresholds = DEFAULT, validate: bool = True
):
    """Analyze every prime and test constancy of formal character, total rank, A_n counts and A4 parity."""
    if len(b.primes) < 2:
        raise SchemaError("independence check needs at least two primes")
    if validate:
        b.validate_primes(thresholds)
    per = [analyze_prime(b, p, seed, mode, thresholds) for p in b.primes]
    checks = {
        "fc_constant": lambda r: r["formal_character"],
        "total_rank_constant": lambda r: r["rank_report"]["total_rank"],
        "an_counts_constant": lambda r: r["an_counts"],
        "a4_parity_constant": lambda r: r["rank_report"]["a4_parity"],
    }
    report = {"label": b.label, "n": b.n, "primes": list(b.primes), "seed": seed, "version": __version__}
    offending = set()
    for name, key in checks.items():
        bad = _offenders(per, key)
        report[name] = not bad
        offending.update(bad)
    report["verdict"] = all(report[k] for k in checks)
    report["offending_primes"] = sorted(offending)
    report["ell_min"] = b.ell_min if b.ell_min is not None else thresholds.ell_min(b.n)
    report["per_prime"] = per
    return report


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"

"""Report assembly, canonical serialization, and the corpus runner.

A report is a plain dict of JSON-safe values; canonical_json renders it
with sorted keys so identical (input, config) pairs are byte-identical.
The text rendering carries the same numbers for human reading.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .errors import (
    EXIT_EXCLUDED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNSTABLE,
    ExcludedCaseError,
    GammaIdentityViolation,
    ImproperIntersection,
    NonIsolated,
    NoValidFrame,
    ParseError,
)
from .ideals import Ideal, dimension, local_colength, mora_standard_basis
from .link import (
    BettiVector,
    FeasibilityCheck,
    allowed_degrees,
    betti_feasibility,
    chain_complex,
    lambda_from_gamma,
    morse_bounds,
    n1_exact_sequence,
    telescope_table,
)
from .oracle import (
    HARD_DEGREE_CAP,
    OracleVerdict,
    default_cap,
    gamma_identity_audit,
    stable_colength,
    teissier_check,
    verdict,
)
from .parse import parse_polynomial
from .polar import gamma_profile, jacobian_ideal, polar_ideal
from .poly import INFINITE

SCHEMA_VERSION = 1
ENGINE_VERSION = "0.1.0"

MAX_DEGREE_ENV = "POLARLINK_MAX_DEGREE"


def oracle_degree_cap():
    """Hard cap for the truncated oracle, overridable via the environment."""
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None:
        return HARD_DEGREE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}")
    if cap < 2:
        raise ValueError(f"{MAX_DEGREE_ENV} must be at least 2")
    return cap


@dataclass(frozen=True)
class RunConfig:
    poly_text: str
    varnames: tuple
    trials: int = 5
    seed: int = 0
    bound: int = 10
    betti: object = None
    components: object = None
    fmt: str = "json"
    json_path: object = None

    def validate(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")
        if len(self.varnames) < 2:
            raise ValueError("need at least two variables")
        if self.fmt not in ("json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.components is not None and self.components < 1:
            raise ValueError("component count must be positive")


def _verdict_payload(v):
    return {
        "name": v.name,
        "expected": v.expected,
        "actual": v.actual,
        "passed": v.passed,
        "context": v.context,
    }


def _check_payload(c):
    return {"name": c.name, "passed": c.passed, "detail": c.detail}


def _oracle_diagnostics(f, profile, hard_cap):
    """Cross-checks recorded with every report: the boundary identities,
    the truncated-colength oracle against each accepted gamma value and
    against the Milnor number, and the Teissier sum when f is isolated.
    Also collects the saturation exponents seen at the witness frames."""
    verdicts = list(gamma_identity_audit(profile))
    start = default_cap(f)
    exponents = []
    for k in range(1, profile.n + 1):
        fr = profile.witness_frame(k)
        pol = polar_ideal(f, fr, k)
        exponents.append(pol.saturation_exponent)
        if pol.ideal.is_zero() or dimension(mora_standard_basis(pol.ideal)) == -1:
            continue
        cut = [g.substitute_zero(range(k)) for g in pol.ideal.gens]
        restricted = Ideal(
            [g for g in cut if not g.is_zero()], f.nvars - k
        )
        r = stable_colength(restricted, start, hard_cap)
        verdicts.append(
            verdict(
                f"colength_oracle_k{k}",
                profile.gamma[k],
                r.value if r.stable else "unstable",
                context=f"cap={r.cap}",
            )
        )
    if profile.s == 0:
        J = jacobian_ideal(f)
        mu = local_colength(J)
        r = stable_colength(J, start, hard_cap)
        verdicts.append(
            verdict(
                "colength_oracle_milnor",
                mu,
                r.value if r.stable else "unstable",
                context=f"cap={r.cap}",
            )
        )
        for fr in profile.frames:
            try:
                verdicts.append(teissier_check(f, fr))
                break
            except (NonIsolated, ImproperIntersection):
                continue
        else:
            verdicts.append(
                OracleVerdict(
                    "teissier_polar_against_slice",
                    "a usable frame",
                    "none among the sampled frames",
                    False,
                )
            )
    return verdicts, exponents


def _error_document(cfg, kind, reason):
    return {
        "schema_version": SCHEMA_VERSION,
        "engine": {"name": "polarlink", "version": ENGINE_VERSION},
        "input": _input_echo(cfg),
        "error": {"kind": kind, "reason": reason},
    }


def _input_echo(cfg):
    return {
        "poly": cfg.poly_text,
        "vars": list(cfg.varnames),
        "trials": cfg.trials,
        "seed": cfg.seed,
        "bound": cfg.bound,
        "betti": list(cfg.betti) if cfg.betti is not None else None,
        "betti_source": "user-supplied" if cfg.betti is not None else None,
        "components": cfg.components,
    }


def build_report(cfg):
    """Full pipeline on validated input; raises the typed errors."""
    cfg.validate()
    f = parse_polynomial(cfg.poly_text, cfg.varnames)
    hard_cap = oracle_degree_cap()
    profile = gamma_profile(f, cfg.trials, cfg.seed, cfg.bound)
    n = profile.n

    betti = None
    if cfg.betti is not None:
        if len(cfg.betti) != 2 * n:
            raise ValueError(
                f"expected {2 * n} Betti numbers for n={n}, got {len(cfg.betti)}"
            )
        betti = BettiVector(tuple(cfg.betti), cfg.components)

    lamp = lambda_from_gamma(profile)
    complex_spec = chain_complex(lamp)
    telescope = telescope_table(profile, lamp)
    bounds = morse_bounds(profile, lamp, betti)
    oracles, exponents = _oracle_diagnostics(f, profile, hard_cap)

    doc = {
        "schema_version": SCHEMA_VERSION,
        "engine": {"name": "polarlink", "version": ENGINE_VERSION},
        "input": _input_echo(cfg),
        "poly_canonical": f.to_str(cfg.varnames),
        "n": n,
        "mult": profile.mult,
        "s": profile.s,
        "gamma": list(profile.gamma),
        "lambda": list(lamp.lam),
        "chain_complex": {
            "ranks": list(complex_spec.ranks),
            "cohomology_degrees": list(complex_spec.degrees),
        },
        "stability": {
            "stable": profile.stable,
            "threshold": (profile.trials + 1) // 2,
            "agreement": list(profile.agreement),
            "per_trial": [list(row) for row in profile.per_trial],
            "witness_trials": list(profile.witness),
            "frames": [
                [list(r) for r in fr.matrix] for fr in profile.frames
            ],
            "saturation_exponents": exponents,
        },
        "telescope": [
            {
                "p": row.p,
                "from_bottom": row.from_bottom,
                "from_bottom_expected": row.from_bottom_expected,
                "from_top": row.from_top,
                "from_top_expected": row.from_top_expected,
            }
            for row in telescope
        ],
        "morse_bounds": [
            {
                "family": b.family,
                "p": b.p,
                "terms": [[sign, deg] for sign, deg in b.terms],
                "rhs": b.rhs,
                "lhs": b.lhs,
                "satisfied": b.satisfied,
            }
            for b in bounds
        ],
        "vanishing_window": {
            "allowed_degrees": list(allowed_degrees(n, profile.s)),
            "s": profile.s,
        },
        "oracles": {
            "verdicts": [_verdict_payload(v) for v in oracles],
            "all_passed": all(v.passed for v in oracles),
        },
    }

    if n == 1:
        seq = n1_exact_sequence(profile, betti)
        doc["n1_exact_sequence"] = {
            "ranks": list(seq.ranks),
            "checks": [_check_payload(c) for c in seq.checks],
        }
    else:
        doc["n1_exact_sequence"] = None

    feasibility = None
    if betti is not None:
        checks = list(betti_feasibility(betti, profile, lamp))
        if n == 1:
            checks.extend(n1_exact_sequence(profile, betti).checks)
        feasibility = {
            "checks": [_check_payload(c) for c in checks],
            "all_passed": all(c.passed for c in checks),
            "note": "rank-level checks only; torsion is invisible to them",
        }
    elif cfg.components is not None and cfg.components != 1:
        c = FeasibilityCheck(
            "multiple_components_force_s",
            profile.s == n - 1,
            f"components {cfg.components} != 1 requires s = n-1 = {n - 1}, "
            f"s = {profile.s}",
        )
        feasibility = {
            "checks": [_check_payload(c)],
            "all_passed": c.passed,
            "note": "rank-level checks only; torsion is invisible to them",
        }
    doc["feasibility"] = feasibility

    if not profile.stable or not doc["oracles"]["all_passed"]:
        code = EXIT_UNSTABLE
    else:
        code = EXIT_OK
    return doc, code


def run_compute(cfg):
    """build_report with the documented error-to-exit-code mapping."""
    try:
        return build_report(cfg)
    except ExcludedCaseError as e:
        return _error_document(cfg, "excluded", e.reason), EXIT_EXCLUDED
    except (NoValidFrame, GammaIdentityViolation) as e:
        return _error_document(cfg, "engine", str(e)), EXIT_UNSTABLE
    except ParseError as e:
        return _error_document(cfg, "input", str(e)), EXIT_INPUT_ERROR
    except ValueError as e:
        return _error_document(cfg, "input", str(e)), EXIT_INPUT_ERROR


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _fmt_term(sign, deg, first):
    op = "+" if sign > 0 else "-"
    if first and sign > 0:
        return f"b~^{deg}"
    return f"{op} b~^{deg}"


def render_text(doc):
    """Human rendering; every number in the JSON body appears here too."""
    lines = []
    eng = doc["engine"]
    lines.append(f"polarlink report (engine {eng['version']}, schema {doc['schema_version']})")
    inp = doc["input"]
    lines.append(f"input: {inp['poly']} in variables {', '.join(inp['vars'])}")
    lines.append(
        f"config: trials={inp['trials']} seed={inp['seed']} bound={inp['bound']}"
    )
    if "error" in doc:
        err = doc["error"]
        lines.append(f"error ({err['kind']}): {err['reason']}")
        return "\n".join(lines) + "\n"
    lines.append(f"canonical form: {doc['poly_canonical']}")
    lines.append(f"n={doc['n']} mult={doc['mult']} s={doc['s']}")
    st = doc["stability"]
    flag = "stable" if st["stable"] else "UNSTABLE"
    lines.append(
        f"gamma: {doc['gamma']}  ({flag}; agreement {st['agreement']} of "
        f"{inp['trials']}, threshold {st['threshold']})"
    )
    lines.append(f"lambda: {doc['lambda']}")
    lines.append(f"saturation exponents at witness frames: {st['saturation_exponents']}")
    cc = doc["chain_complex"]
    lines.append("chain complex (rank -> cohomology degree of the link):")
    for k, (r, d) in enumerate(zip(cc["ranks"], cc["cohomology_degrees"])):
        lines.append(f"  term {k}: rank {r} -> degree {d}")
    lines.append("telescope checks:")
    for row in doc["telescope"]:
        lines.append(
            f"  p={row['p']}: bottom {row['from_bottom']} == "
            f"{row['from_bottom_expected']}, top {row['from_top']} == "
            f"{row['from_top_expected']}"
        )
    lines.append("morse bounds:")
    for b in doc["morse_bounds"]:
        terms = " ".join(
            _fmt_term(s, d, i == 0) for i, (s, d) in enumerate(b["terms"])
        )
        tail = ""
        if b["lhs"] is not None:
            mark = "ok" if b["satisfied"] else "VIOLATED"
            tail = f"   [lhs={b['lhs']} {mark}]"
        lines.append(f"  family {b['family']}, p={b['p']}: {terms} <= {b['rhs']}{tail}")
    vw = doc["vanishing_window"]
    lines.append(f"vanishing window: nonzero reduced degrees allowed at {vw['allowed_degrees']}")
    if doc["n1_exact_sequence"] is not None:
        seq = doc["n1_exact_sequence"]
        r = seq["ranks"]
        b0 = "b~^0" if r[0] is None else str(r[0])
        b1 = "b~^1" if r[3] is None else str(r[3])
        lines.append(
            f"n=1 sequence ranks: {b0} -> {r[1]} -> {r[2]} -> {b1}"
        )
        for c in seq["checks"]:
            mark = "pass" if c["passed"] else "FAIL"
            lines.append(f"  {c['name']}: {mark} ({c['detail']})")
    if doc["feasibility"] is not None:
        fz = doc["feasibility"]
        lines.append(
            f"feasibility of user-supplied Betti data ({fz['note']}):"
        )
        for c in fz["checks"]:
            mark = "pass" if c["passed"] else "FAIL"
            lines.append(f"  {c['name']}: {mark} ({c['detail']})")
        lines.append(f"  all passed: {'yes' if fz['all_passed'] else 'no'}")
    orc = doc["oracles"]
    lines.append("oracle verdicts:")
    for v in orc["verdicts"]:
        mark = "pass" if v["passed"] else "FAIL"
        ctx = f" ({v['context']})" if v["context"] else ""
        lines.append(f"  {v['name']}: {mark} expected {v['expected']}, got {v['actual']}{ctx}")
    lines.append(f"oracles all passed: {'yes' if orc['all_passed'] else 'no'}")
    return "\n".join(lines) + "\n"


# --- corpus -------------------------------------------------------------


def bundled_corpus_path():
    return os.path.join(os.path.dirname(__file__), "data", "corpus.jsonl")


def _corpus_entry_audits(entry, doc, code):
    """Per-entry audit verdicts; failures make the corpus run exit 2."""
    audits = []
    if "error" in doc:
        audits.append(("run", False, doc["error"]["reason"]))
        return audits
    audits.append(("stable", doc["stability"]["stable"], ""))
    audits.append(("oracles", doc["oracles"]["all_passed"], ""))
    expect = entry.get("expect_gamma")
    if expect is not None:
        ok = list(expect) == doc["gamma"]
        audits.append(
            ("expect_gamma", ok, f"expected {expect}, got {doc['gamma']}")
        )
    return audits


def run_corpus(path, trials=5, seed=0, bound=10):
    """Run every corpus entry, audit it, and build a summary table.

    Returns (summary text, reports, exit code).  Exit 1 flags unreadable
    input naming the offending line, exit 2 flags audit failures, exit 0
    means every audit passed (vacuously for an empty corpus).
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as e:
        return f"error: cannot read corpus: {e}\n", [], EXIT_INPUT_ERROR

    lines = []
    reports = []
    failed = False
    for lineno, raw in enumerate(raw_lines, start=1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            entry = json.loads(raw)
        except json.JSONDecodeError as e:
            return (
                f"error: corpus line {lineno} is not valid JSON: {e}\n",
                [],
                EXIT_INPUT_ERROR,
            )
        if not isinstance(entry, dict) or not {"name", "poly", "vars"} <= set(entry):
            return (
                f"error: corpus line {lineno} needs name, poly and vars fields\n",
                [],
                EXIT_INPUT_ERROR,
            )
        cfg = RunConfig(
            poly_text=entry["poly"],
            varnames=tuple(entry["vars"]),
            trials=trials,
            seed=seed,
            bound=bound,
            betti=tuple(entry["betti"]) if entry.get("betti") is not None else None,
            components=entry.get("components"),
        )
        doc, code = run_compute(cfg)
        if code == EXIT_INPUT_ERROR:
            return (
                f"error: corpus line {lineno} ({entry['name']}): "
                f"{doc['error']['reason']}\n",
                [],
                EXIT_INPUT_ERROR,
            )
        reports.append((entry["name"], doc, code))
        if code == EXIT_EXCLUDED:
            lines.append(f"{entry['name']:24s} excluded: {doc['error']['reason']}")
            continue
        audits = _corpus_entry_audits(entry, doc, code)
        bad = [name for name, ok, _ in audits if not ok]
        if bad:
            failed = True
        gamma = doc.get("gamma", "-")
        feas = ""
        if doc.get("feasibility") is not None:
            feas = (
                " betti-ok"
                if doc["feasibility"]["all_passed"]
                else " betti-INFEASIBLE"
            )
        status = "ok" if not bad else "FAIL(" + ",".join(bad) + ")"
        lines.append(f"{entry['name']:24s} gamma={gamma} {status}{feas}")

    total = len(reports)
    lines.append(f"{total} entries, " + ("audit failures present" if failed else "all audits passed"))
    summary = "\n".join(lines) + "\n"
    return summary, reports, (EXIT_UNSTABLE if failed else EXIT_OK)

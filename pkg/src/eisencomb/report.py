"""Rendering of instance and sweep reports as JSON, CSV and text.

Every renderer works from the JSON-ready dictionaries produced by
``LemmaReport.to_json`` and ``verifier.sweep`` so that saved reports can be
re-rendered without recomputation.
"""

from __future__ import annotations

import csv
import io
import json

__all__ = ["dumps_json", "instance_text", "sweep_text", "sweep_csv", "CSV_COLUMNS"]

CSV_COLUMNS = [
    "block",
    "lambda",
    "lambda_prime",
    "w",
    "w_prime",
    "p_mu",
    "a_mu",
    "a_lower",
    "a_upper",
    "closed_form",
    "brute_force",
    "verdict",
    "nu0",
    "witness_w",
    "witness_mu_tilde",
    "witness_count",
]


def dumps_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _fmt_list(values) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


def instance_text(rec: dict) -> str:
    d = rec["derived"]
    lines = [
        f"instance    lambda={rec['lambda']}  lambda'={rec['lambda_prime']}  (n,n')={rec['block']}",
        f"GL_n        a={d['a']}  d={d['d']}  w={d['w']}",
        f"GL_n'       a'={d['a_prime']}  d'={d['d_prime']}  w'={d['w_prime']}",
        "hodge       "
        + " ".join(
            f"({r['p']},{r['q']})" if r["mult"] == 1 else f"{r['mult']}x({r['p']},{r['q']})"
            for r in d["hodge"]["pairs"]
        ),
        f"h^mid       {d['middle_hodge_number']}",
        f"a(mu)       {d['a_mu']}",
    ]
    if "p_mu" in d:
        lo, hi = d["a_interval"]
        lines += [
            f"p(mu)       {d['p_mu']}",
            f"interval    [{lo}, {hi}]  ({d['admissible_count']} admissible values)",
            f"critical    coh {_fmt_list(d['critical_coh'])}",
            f"            automorphic {_fmt_list(d['critical_automorphic'])}"
            + ("" if d["automorphic_symmetric"] else f"  (centre {d['automorphic_center']}, not 1/2)"),
            f"nu0         {d['nu0']}" + ("" if d["nu0_integral"] else "  (not an integer)"),
        ]
    closed = rec["closed_form"]
    lines += [
        f"closed form {'n/a' if closed is None else str(closed).lower()}",
        f"brute force {str(rec['brute_force']).lower()}  ({rec['witness_count']} witnesses)",
    ]
    if rec["witness"]:
        wit = rec["witness"]
        lines.append(f"witness     w={wit['w']}  l(w)={wit['length']}  mu~={wit['mu_tilde']}")
    for st in d.get("ratio_statements", []):
        lines.append(f"ratio       m={st['m']}  m0={st['m0']}  eps_m={st['epsilon_m']:+d}  {st['claim']}")
    lines.append(f"verdict     {rec['verdict']}")
    return "\n".join(lines) + "\n"


def sweep_text(report: dict) -> str:
    cfg = report["config"]
    c = report["counts"]
    lines = [
        f"sweep blocks={','.join(cfg['block_pairs'])} bound={cfg['entry_bound']} twists={cfg['twist_range']}",
    ]
    for blk in report["per_block"]:
        lines.append(block_summary_line(blk))
    lines.append(
        f"total agree_true={c['agree_true']} agree_false={c['agree_false']} "
        f"discrepancy={c['discrepancy']} hypothesis_fail={c['hypothesis_fail']}"
    )
    for rec in report["discrepancies"]:
        lines.append("")
        lines.append("DISCREPANCY")
        lines.append(instance_text(rec).rstrip("\n"))
    for rec in report.get("instances") or []:
        lines.append("")
        lines.append(instance_text(rec).rstrip("\n"))
    return "\n".join(lines) + "\n"


def block_summary_line(blk: dict) -> str:
    c = blk["counts"]
    return (
        f"{blk['block']}: {blk['instances']} instances, {blk['orbits']} orbits; "
        f"agree_true={c['agree_true']} agree_false={c['agree_false']} "
        f"discrepancy={c['discrepancy']} hypothesis_fail={c['hypothesis_fail']}; "
        f"orbit checks passed={blk['orbit_checks_passed']} failed={len(blk['orbit_checks_failed'])}; "
        f"anomalies={len(blk['anomalies'])}"
    )


def instance_row(rec: dict) -> dict:
    d = rec["derived"]
    wit = rec["witness"] or {}
    lo, hi = d.get("a_interval", ["", ""])
    return {
        "block": rec["block"],
        "lambda": rec["lambda"],
        "lambda_prime": rec["lambda_prime"],
        "w": d["w"],
        "w_prime": d["w_prime"],
        "p_mu": d.get("p_mu", ""),
        "a_mu": d["a_mu"],
        "a_lower": lo,
        "a_upper": hi,
        "closed_form": "" if rec["closed_form"] is None else str(rec["closed_form"]).lower(),
        "brute_force": str(rec["brute_force"]).lower(),
        "verdict": rec["verdict"],
        "nu0": d.get("nu0", ""),
        "witness_w": wit.get("w", ""),
        "witness_mu_tilde": wit.get("mu_tilde", ""),
        "witness_count": rec["witness_count"],
    }


def sweep_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(instance_row(rec))
    return buf.getvalue()

"""Per-weight report blocks and their JSON / CSV encodings.

Exact quantities are written as "num/den" strings; numeric sections carry
explicit error bounds.  Key order is fixed so output bytes are deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import mpmath

from oddzeta.depthmap import dmatrix, predicted_rank
from oddzeta.numzeta import resolve_decomposition_convention, verify_relation_numeric
from oddzeta.periodspace import w_basis
from oddzeta.ratcore import rank
from oddzeta.relspace import relations, verify_exactness
from oddzeta.symcheck import lemma_suite

SCHEMA_VERSION = "1.0"
SUITES = ("exact", "lemmas", "numeric")

CSV_FIELDS = (
    "N",
    "generator_count",
    "rank",
    "predicted_rank",
    "dim_w_plus",
    "dim_w_minus",
    "n_relations",
    "composition_vanishes",
    "j_injective",
    "middle_exact",
    "xi_isomorphism",
    "lemmas_ok",
    "numeric_ok",
)


@dataclass(frozen=True)
class RunConfig:
    suites: tuple = ("exact", "lemmas")
    eps: float = 1e-8


def fmt_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def load_schema() -> dict:
    return json.loads(resources.files("oddzeta").joinpath("report.schema.json").read_text())


def _exactness_block(n: int) -> dict:
    rep = verify_exactness(n)
    return dict(rep.certificates, ok=rep.ok)


def _lemma_block(n: int) -> dict:
    rep = lemma_suite(n)
    return {
        "admissible_dim": rep.admissible_dim,
        "membership": rep.membership,
        "split_identity": rep.split_identity,
        "symmetrized_admissible": rep.symmetrized_admissible,
        "identity_e": rep.identity_e,
        "ok": rep.ok,
    }


def _numeric_block(n: int, eps: float) -> dict:
    certs = []
    for rel in relations(n):
        c = verify_relation_numeric(n, rel, eps)
        certs.append(
            {
                "ratio": mpmath.nstr(c.ratio, 25),
                "ratio_error_bound": c.ratio_error,
                "rational": fmt_rational(c.rational),
                "distance": c.distance,
                "passed": c.passed,
            }
        )
    convention = None
    ok = all(c["passed"] for c in certs)
    if n in (5, 7, 9):
        conv = resolve_decomposition_convention(n)
        convention = {
            "matching": list(conv.matching),
            "product_terms_match": conv.product_terms_match,
            "empirical_zetaN_coeffs": [fmt_rational(r.empirical_zetaN_coeff) for r in conv.rows],
            "printed_zetaN_coeffs": [fmt_rational(r.printed_zetaN_coeff) for r in conv.rows],
        }
        ok = ok and len(conv.matching) == 1 and conv.product_terms_match
    return {"eps": eps, "certificates": certs, "convention": convention, "ok": ok}


def weight_block(n: int, config: RunConfig = RunConfig()) -> dict:
    d = dmatrix(n)
    rels = relations(n)
    block = {
        "N": n,
        "generator_count": d.rows,
        "dmatrix": [[fmt_rational(x) for x in d.row(i)] for i in range(d.rows)],
        "rank": rank(d),
        "predicted_rank": predicted_rank(n),
        "dim_w_plus": w_basis(n - 1, "+").dim,
        "dim_w_minus": w_basis(n + 1, "-").dim,
        "relation_indices": list(range(3, n - 1, 2)),
        "relations": [[fmt_rational(x) for x in r.coeffs] for r in rels],
        "exactness": _exactness_block(n) if "exact" in config.suites else None,
        "lemmas": _lemma_block(n) if "lemmas" in config.suites else None,
        "numeric": _numeric_block(n, config.eps) if "numeric" in config.suites else None,
    }
    return block


def block_ok(block: dict) -> bool:
    if block["rank"] != block["predicted_rank"]:
        return False
    return all(block[k] is None or block[k]["ok"] for k in ("exactness", "lemmas", "numeric"))


def make_report(blocks: list[dict], config: RunConfig) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "suites": list(config.suites),
        "weights": blocks,
        "ok": all(block_ok(b) for b in blocks),
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _flag(section, key="ok") -> str:
    if section is None:
        return ""
    return str(section[key]).lower()


def csv_row(block: dict) -> dict:
    ex = block["exactness"]
    return {
        "N": block["N"],
        "generator_count": block["generator_count"],
        "rank": block["rank"],
        "predicted_rank": block["predicted_rank"],
        "dim_w_plus": block["dim_w_plus"],
        "dim_w_minus": block["dim_w_minus"],
        "n_relations": len(block["relations"]),
        "composition_vanishes": _flag(ex, "composition_vanishes"),
        "j_injective": _flag(ex, "j_injective"),
        "middle_exact": _flag(ex, "middle_exact"),
        "xi_isomorphism": _flag(ex, "xi_isomorphism"),
        "lemmas_ok": _flag(block["lemmas"]),
        "numeric_ok": _flag(block["numeric"]),
    }


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for b in report["weights"]:
        w.writerow(csv_row(b))
    return buf.getvalue()

"""JSON / CSV serialisation of per-graph reports and verification reports.

JSON floats are written with ``repr`` precision (shortest round-trip form), so
``load_report(emit_report(doc, "json"))`` reproduces ``doc`` exactly. CSV cells
use the same float formatting.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Union

from .bounds import BoundEvaluation, evaluate_all
from .graph import Graph
from .graph6 import to_graph6
from .indices import DEFAULT_ALPHAS, IndexVector, index_vector
from .lab import N_MAX_LIMIT, Mismatch, VerificationReport, Violation, certificate


@dataclass(frozen=True)
class GraphRecord:
    certificate: str
    canonical: bool
    n: int
    m: int
    indices: IndexVector
    bounds: tuple[BoundEvaluation, ...]


ReportDocument = Union[list[GraphRecord], VerificationReport]


def graph_record(g: Graph, alphas: Iterable[float] = DEFAULT_ALPHAS) -> GraphRecord:
    """Indices and every bound for ``g``.

    The certificate is canonical up to ``N_MAX_LIMIT`` vertices; larger graphs
    keep their input labelling.
    """
    alphas = tuple(float(a) for a in alphas)
    canonical = g.n <= N_MAX_LIMIT
    cert = certificate(g) if canonical else to_graph6(g)
    return GraphRecord(cert, canonical, g.n, g.m, index_vector(g, alphas), tuple(evaluate_all(g, alphas)))


# -- dict conversion ------------------------------------------------------------------

_ALPHA_MAPS = ("z_alpha", "h_alpha")
_SCALARS = ("ga1", "m1", "m2", "f_index", "harmonic", "randic", "modified_zagreb", "h_minus2")


def _indices_to_dict(iv: IndexVector) -> dict:
    out: dict = {k: getattr(iv, k) for k in _SCALARS}
    for k in _ALPHA_MAPS:
        out[k] = {repr(a): v for a, v in getattr(iv, k).items()}
    return out


def _indices_from_dict(d: dict) -> IndexVector:
    kw = {k: d[k] for k in _SCALARS}
    for k in _ALPHA_MAPS:
        kw[k] = {float(a): v for a, v in d[k].items()}
    return IndexVector(**kw)


def bound_to_dict(ev: BoundEvaluation) -> dict:
    return {
        "bound_id": ev.bound_id,
        "lower": ev.lower,
        "value": ev.value,
        "upper": ev.upper,
        "holds": ev.holds,
        "tight_lower": ev.tight_lower,
        "tight_upper": ev.tight_upper,
        "structural_lower": ev.structural_lower,
        "structural_upper": ev.structural_upper,
        "agreement_lower": ev.agreement_lower,
        "agreement_upper": ev.agreement_upper,
        "vacuous": ev.vacuous,
        "applicability": list(ev.applicability),
        "params": dict(ev.params),
        "checks": dict(ev.checks),
        "inapplicable": ev.inapplicable,
    }


def bound_from_dict(d: dict) -> BoundEvaluation:
    return BoundEvaluation(
        bound_id=d["bound_id"],
        value=d["value"],
        lower=d["lower"],
        upper=d["upper"],
        structural_lower=d["structural_lower"],
        structural_upper=d["structural_upper"],
        applicability=tuple(d["applicability"]),
        params=d["params"],
        checks=d["checks"],
        inapplicable=d["inapplicable"],
    )


def record_to_dict(rec: GraphRecord) -> dict:
    return {
        "certificate": rec.certificate,
        "canonical": rec.canonical,
        "n": rec.n,
        "m": rec.m,
        "indices": _indices_to_dict(rec.indices),
        "bounds": [bound_to_dict(b) for b in rec.bounds],
    }


def record_from_dict(d: dict) -> GraphRecord:
    return GraphRecord(
        d["certificate"],
        d["canonical"],
        d["n"],
        d["m"],
        _indices_from_dict(d["indices"]),
        tuple(bound_from_dict(b) for b in d["bounds"]),
    )


def verification_to_dict(rep: VerificationReport) -> dict:
    return {
        "parameters": rep.parameters,
        "graphs_checked": rep.graphs_checked,
        "confirmed": rep.confirmed,
        "violations": [vars(v) for v in rep.violations],
        "characterization_mismatches": [vars(v) for v in rep.characterization_mismatches],
        "tightness_census": rep.tightness_census,
    }


def verification_from_dict(d: dict) -> VerificationReport:
    return VerificationReport(
        graphs_checked=d["graphs_checked"],
        violations=[Violation(**v) for v in d["violations"]],
        characterization_mismatches=[Mismatch(**v) for v in d["characterization_mismatches"]],
        tightness_census=d["tightness_census"],
        parameters=d["parameters"],
    )


# -- emit / load ---------------------------------------------------------------------------

def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _verdict(holds: bool, tight: bool | None) -> str:
    if not holds:
        return "violated"
    return "tight" if tight else "strict"


def _records_csv(records: list[GraphRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["certificate", "ga1", "bound", "structural", "agreement", "bound_id", "side", "verdict"])
    for rec in records:
        for ev in rec.bounds:
            if ev.inapplicable is not None:
                w.writerow([rec.certificate, _cell(ev.value), "", "", "", ev.bound_id, "", "inapplicable"])
                continue
            for side in ("lower", "upper"):
                bound, tight, structural, agree = ev.side(side)
                if bound is None:
                    continue
                row = [rec.certificate, ev.value, bound, structural, agree, ev.bound_id, side, _verdict(ev.holds, tight)]
                w.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _verification_csv(rep: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "certificate", "bound_id", "side", "lower", "value", "upper", "numeric", "structural", "count"])
    for bid, counts in rep.tightness_census.items():
        for key in ("evaluated", "lower", "upper"):
            w.writerow(["census", "", bid, key, "", "", "", "", "", counts[key]])
    for v in rep.violations:
        w.writerow([_cell(x) for x in ("violation", v.certificate, v.bound_id, v.side, v.lower, v.value, v.upper, None, None, None)])
    for mm in rep.characterization_mismatches:
        w.writerow([_cell(x) for x in ("mismatch", mm.certificate, mm.bound_id, mm.side, None, None, None, mm.numeric, mm.structural, None)])
    return buf.getvalue()


def emit_report(doc: ReportDocument, fmt: str = "json") -> bytes:
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown report format {fmt!r}")
    if isinstance(doc, VerificationReport):
        if fmt == "json":
            return (json.dumps(verification_to_dict(doc), indent=2) + "\n").encode()
        return _verification_csv(doc).encode()
    records = list(doc)
    if fmt == "json":
        return (json.dumps({"graphs": [record_to_dict(r) for r in records]}, indent=2) + "\n").encode()
    return _records_csv(records).encode()


def load_report(data: bytes | str) -> ReportDocument:
    """Inverse of ``emit_report(doc, "json")``."""
    d = json.loads(data)
    if "graphs" in d:
        return [record_from_dict(r) for r in d["graphs"]]
    return verification_from_dict(d)

"""Full analysis pipeline producing a deterministic JSON report."""

from __future__ import annotations

import hashlib
import time
from contextlib import contextmanager

from .classify import extract_group_datum
from .coalgebra import Coalgebra
from .fileformat import canonical_json, to_dict
from .fusion import check_based_ring, check_fpdim, fusion_table, require_dual_chevalley
from .hopf import HopfAlgebra
from .quiver import (FINITE, arrow_fusion_check, build_link_quiver, components, degree_report,
                     evaluate_criteria, h1_component, quiver_verdict, to_dot)
from .semisimple import simple_subcoalgebras


def input_hash(c: Coalgebra) -> str:
    return hashlib.sha256(canonical_json(to_dict(c)).encode()).hexdigest()


class _Timer:
    def __init__(self):
        self.stages: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        yield
        self.stages[name] = round(time.perf_counter() - start, 6)


def analyze(c: Coalgebra, timings: bool = False) -> tuple[dict, str]:
    """Run every stage; return (report, dot). Hopf inputs must have the dual Chevalley property."""
    is_hopf = isinstance(c, HopfAlgebra)
    if is_hopf:
        require_dual_chevalley(c)
    timer = _Timer()
    report: dict = {
        "input": {"name": c.name, "sha256": input_hash(c), "dim": c.dim,
                  "cyclotomic_order": c.field.cyclotomic_order, "hopf": is_hopf},
    }
    with timer.stage("coradical"):
        report["coradical_filtration"] = [s.dim for s in c.coradical_filtration()]
    with timer.stage("decomposition"):
        decomp = simple_subcoalgebras(c)
    report["simples"] = {"labels": decomp.labels(), "ranks": [b.r for b in decomp],
                         "dims": [b.r * b.r for b in decomp]}
    table = None
    if is_hopf:
        with timer.stage("fusion"):
            table = fusion_table(c, decomp)
        report["fusion"] = table.to_json()
        report["fusion_checks"] = {"fpdim": check_fpdim(table).ok, "based_ring": check_based_ring(table).ok}
    with timer.stage("quiver"):
        quiver = build_link_quiver(c, decomp)
    report["quiver"] = quiver.to_json()
    report["components"] = [[quiver.labels[v] for v in comp] for comp in components(quiver)]
    with timer.stage("verdict"):
        if is_hopf:
            v = quiver_verdict(quiver, c.is_cosemisimple())
            report["verdict"] = v.to_json()
        else:
            crit = evaluate_criteria(quiver)
            report["verdict"] = None
            report["quiver_criteria"] = {
                "in_out_degree_one": crit.every_vertex_in_out_one,
                "unique_arrow_into_vertex0_from_rank_one": crit.unique_arrow_into_unit_from_rank_one,
                "unique_arrow_out_of_vertex0_to_rank_one": crit.unique_arrow_out_of_unit_to_rank_one,
            }
    if is_hopf:
        with timer.stage("component"):
            comp = h1_component(c, quiver, decomp)
        report["unit_component"] = {"vertices": [quiver.labels[i] for i in comp.vertices],
                                    "dim": comp.space.dim, "pointed": comp.pointed}
        datum = None
        if report["verdict"]["kind"] == FINITE:
            with timer.stage("datum"):
                datum = extract_group_datum(c)
        report["group_datum"] = datum.to_json() if datum else None
        check = arrow_fusion_check(quiver, table)
        report["arrow_fusion_check"] = {
            "applicable": check.applicable,
            "k": None if check.k is None else quiver.labels[check.k],
            "failures": [list(f) for f in check.failures],
        }
    report["degree_report"] = degree_report(quiver)
    if timings:
        report["timings"] = timer.stages
    return report, to_dot(quiver, name=c.name)


def summary_line(report: dict) -> str:
    v = report.get("verdict")
    if v is None:
        return "no verdict (coalgebra input)"
    return {"COSEMISIMPLE": "cosemisimple", "FINITE": "finite corepresentation type",
            "INFINITE": "infinite corepresentation type"}[v["kind"]]


def render(report: dict) -> str:
    return canonical_json(report)

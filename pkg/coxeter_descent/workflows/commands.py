from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from coxeter_descent.algebra.classification import expected_verdict
from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.algebra.no_native import commutation_witness, maximal_subset
from coxeter_descent.algebra.subalgebra import SCHEMA_VERSION, detect_native_basis
from coxeter_descent.classical.chain_formulas import chain_family
from coxeter_descent.classical.csv_tables import format_terms, structure_constant_csv, structure_constant_table
from coxeter_descent.core.coxeter_system import CoxeterSystem, build_system, format_word
from coxeter_descent.core.subsets import format_subset, parse_subset
from coxeter_descent.utils.config import Settings
from coxeter_descent.utils.io_utils import dumps_csv, dumps_json, text_block
from coxeter_descent.utils.logging_utils import setup_logger
from coxeter_descent.workflows.reproduction_controller import ReproductionController

JSON = "json"
CSV = "csv"
TEXT = "text"
FORMATS = (JSON, CSV, TEXT)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3

logger = setup_logger("workflow.commands")


@dataclass
class CommandResult:
    text: str
    exit_code: int = EXIT_OK


def _system(spec: str, settings: Settings) -> CoxeterSystem:
    return build_system(spec, enumeration_cap=settings.enumeration_cap)


def _word(w) -> str:
    return format_word(w.word())


# --------------------------------------------------
# group
# --------------------------------------------------


def cmd_group(spec: str, settings: Settings, fmt: str = JSON) -> CommandResult:
    system = _system(spec, settings)
    model = system.model
    data: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "type": system.label,
        "aliases": system.ctype.alternate_labels(),
        "rank": system.rank,
        "order": system.group_order,
        "coxeter_matrix": [list(row) for row in system.coxeter_matrix],
        "model": model.kind,
        "generators": [model.format_payload(g.payload) for g in system.generators()],
        "enumerable": system.enumerable,
    }
    if not system.enumerable:
        data["note"] = f"enumeration disabled: order exceeds the cap {system.enumeration_cap}"

    if fmt == CSV:
        header = ["s"] + [f"s{j}" for j in range(1, system.rank + 1)]
        rows = [[f"s{i + 1}"] + list(row) for i, row in enumerate(system.coxeter_matrix)]
        return CommandResult(dumps_csv(header, rows))
    if fmt == TEXT:
        lines = [
            f"type: {system.label}" + (f" (= {', '.join(data['aliases'])})" if data["aliases"] else ""),
            f"rank: {system.rank}",
            f"order: {system.group_order}",
            f"model: {model.kind}",
            "coxeter matrix:",
        ]
        lines += ["  " + " ".join(str(m) for m in row) for row in system.coxeter_matrix]
        lines += [f"  s{i}: {g}" for i, g in enumerate(data["generators"], start=1)]
        if "note" in data:
            lines.append(data["note"])
        return CommandResult(text_block(lines))
    return CommandResult(dumps_json(data))


# --------------------------------------------------
# transversal
# --------------------------------------------------


def cmd_transversal(
    spec: str, J_text: str, K_text: Optional[str], settings: Settings, fmt: str = JSON
) -> CommandResult:
    system = _system(spec, settings)
    algebra = DescentAlgebra(system)
    J = parse_subset(J_text, system.rank)
    if K_text is None:
        transversal = algebra.min_coset_reps(J)
    else:
        transversal = algebra.min_double_coset_reps(J, parse_subset(K_text, system.rank))

    if fmt == CSV:
        rows = [[i, _word(w), w.length] for i, w in enumerate(transversal)]
        return CommandResult(dumps_csv(["index", "word", "length"], rows))
    if fmt == TEXT:
        return CommandResult(text_block(transversal.words()))
    data = {"schema": SCHEMA_VERSION, "type": system.label}
    data.update(transversal.to_json())
    return CommandResult(dumps_json(data))


# --------------------------------------------------
# product
# --------------------------------------------------


def cmd_product(spec: str, J_text: str, K_text: str, settings: Settings, fmt: str = JSON) -> CommandResult:
    system = _system(spec, settings)
    algebra = DescentAlgebra(system)
    J = parse_subset(J_text, system.rank)
    K = parse_subset(K_text, system.rank)
    product = algebra.solomon_product(J, K)

    if fmt == CSV:
        rows = [[format_subset(L), c] for L, c in product.items()]
        return CommandResult(dumps_csv(["L", "coefficient"], rows))
    if fmt == TEXT:
        return CommandResult(f"x_{format_subset(J)} * x_{format_subset(K)} = {product}\n")
    data = {
        "schema": SCHEMA_VERSION,
        "type": system.label,
        "J": format_subset(J),
        "K": format_subset(K),
        "product": product.to_json(),
    }
    return CommandResult(dumps_json(data))


# --------------------------------------------------
# analyze
# --------------------------------------------------


def cmd_analyze(spec: str, s: int, settings: Settings, fmt: str = JSON) -> CommandResult:
    """Native-basis report for J = S∖{s}; exit 1 when the verdict disagrees with the classification."""
    system = _system(spec, settings)
    algebra = DescentAlgebra(system)
    J = maximal_subset(system, s)
    report = detect_native_basis(algebra, J)
    expected = expected_verdict(system.ctype, s)
    matches = report.has_native_basis == expected.native and report.all_integer == expected.integral
    witness = None if report.has_native_basis else commutation_witness(algebra, s)
    if not matches:
        logger.error(
            "%s s=%d: native=%s integral=%s, expected %s",
            system.label,
            s,
            report.has_native_basis,
            report.all_integer,
            expected,
        )
    code = EXIT_OK if matches else EXIT_MISMATCH

    data = report.to_json()
    data.update(
        {
            "s": s,
            "minimal_poly_factored": report.minimal_poly.factored(),
            "expected_native": expected.native,
            "expected_integral": expected.integral,
            "reason": expected.reason,
            "matches": matches,
            "witness": None if witness is None else witness.to_json(),
        }
    )

    if fmt == CSV:
        header = ["L"] + [f"x_J^{k}" for k in range(report.dim)]
        rows = [[format_subset(L)] + [str(c) for c in row] for L, row in zip(report.native_basis, report.change_of_basis)]
        return CommandResult(dumps_csv(header, rows), code)
    if fmt == TEXT:
        lines = [
            f"{system.label}, s = s{s}, J = {format_subset(J)}",
            f"dim Q[x_J] = {report.dim}",
            f"minimal polynomial: {report.minimal_poly.factored()}",
            f"native basis: {'yes' if report.has_native_basis else 'no'}"
            + (f" ({', '.join('x_' + format_subset(L) for L in report.native_basis)})" if report.native_basis else ""),
            f"integral: {'yes' if report.all_integer else 'no'}",
            f"expected: native={expected.native} integral={expected.integral} ({expected.reason})",
        ]
        for L, row in zip(report.native_basis, report.change_of_basis):
            terms = " + ".join(f"({c}) x_J^{k}" for k, c in enumerate(row) if c) or "0"
            lines.append(f"  x_{format_subset(L)} = {terms}")
        if witness is not None:
            lines.append(f"witness: t = s{witness.t}, y = {_word(witness.y) or 'e'}, t^y = s{witness.t_image}")
        return CommandResult(text_block(lines), code)
    return CommandResult(dumps_json(data), code)


# --------------------------------------------------
# table
# --------------------------------------------------


def cmd_table(spec: str, settings: Settings, brute_force: bool = False, fmt: str = CSV) -> CommandResult:
    """Chain structure constants of A_n, B_n or D_n."""
    system = _system(spec, settings)
    family = chain_family(system.ctype.family)
    algebra = DescentAlgebra(system) if brute_force else None
    if fmt == CSV:
        return CommandResult(structure_constant_csv(family, system.rank, algebra))

    table = structure_constant_table(family, system.rank, algebra)
    if fmt == TEXT:
        lines = [
            f"x_{j} * x_{k} = {format_terms(cell)}" for j, row in table.items() for k, cell in row.items()
        ]
        return CommandResult(text_block(lines))
    data = {
        "schema": SCHEMA_VERSION,
        "type": system.label,
        "source": "solomon" if brute_force else "closed_form",
        "indices": list(table),
        "products": {j: {k: dict(cell) for k, cell in row.items()} for j, row in table.items()},
    }
    return CommandResult(dumps_json(data))


# --------------------------------------------------
# reproduce
# --------------------------------------------------


def cmd_reproduce(
    target: str, settings: Settings, fmt: str = JSON, summary_dir: Optional[Path] = None
) -> CommandResult:
    result = ReproductionController(settings, summary_dir).run(target)
    code = EXIT_OK if result.success else EXIT_MISMATCH

    if fmt == CSV:
        rows: List[List[Any]] = []
        for report in result.reports:
            rows += [[report.name, c.anchor, "pass" if c.passed else "fail"] for c in report.checks]
        return CommandResult(dumps_csv(["suite", "anchor", "status"], rows), code)
    if fmt == TEXT:
        return CommandResult(text_block(result.text_lines()), code)
    return CommandResult(dumps_json(result.to_json()), code)

from typing import List

import pandas as pd

from src.application.dtos.report import Report, VerdictModel


class ReportWriter:
    """Salida de informes: JSON (por defecto) o resumen de texto con tablas"""

    @staticmethod
    def render(report: Report, as_text: bool = False) -> str:
        if not as_text:
            return report.to_json()
        return "\n".join(ReportWriter._text_lines(report))

    @staticmethod
    def _text_lines(report: Report) -> List[str]:
        lines = [f"command: {report.command}"]
        if report.system is not None:
            title = report.system.name or ", ".join(report.system.generators)
            lines.append(f"system: {title} [{report.system.mode}] vars={','.join(report.system.variables)}")
        if report.verdict is not None:
            lines.extend(ReportWriter._verdict_lines(report.verdict))
        if report.verification is not None:
            lines.append(f"verification: {'valid' if report.verification else 'INVALID'}")
        if report.bounded is not None:
            bounded = report.bounded
            detail = bounded.monomial if bounded.outcome == "Witness" else f"r={bounded.multipliers}"
            lines.append(f"bounded: {bounded.outcome} ({detail})")
        if report.covering is not None:
            lines.append(f"covering: {report.covering.status} r={report.covering.r} t={report.covering.t}")
        if report.tentacle is not None:
            tentacle = report.tentacle
            lines.append(f"tentacle z={tentacle.z}: {tentacle.points_checked} points checked")
            if tentacle.violations:
                lines.append(_table([v.model_dump() for v in tentacle.violations]))
            else:
                lines.append("no violations")
        if report.suggestions is not None:
            lines.append("suggested z: " + " ".join(
                "(" + ",".join(str(e) for e in z) + ")" for z in report.suggestions
            ))
        if report.examples is not None:
            lines.append(_table([run.model_dump() for run in report.examples]))
            matched = sum(run.matches for run in report.examples)
            lines.append(f"{matched}/{len(report.examples)} verdicts match")
        if report.elapsed_seconds is not None:
            lines.append(f"elapsed: {report.elapsed_seconds:.3f}s")
        lines.append(f"exit code: {report.exit_code}")
        return lines

    @staticmethod
    def _verdict_lines(verdict: VerdictModel) -> List[str]:
        lines = [f"verdict: {verdict.status} ({verdict.scope})"]
        if verdict.chain:
            lines.append("chain: " + " -> ".join(verdict.chain))
        if verdict.status == "Stable":
            lines.append(
                f"closed: {verdict.consequences.closed}, fails SMP: {verdict.consequences.fails_smp}"
            )
        rows = [
            {
                "z": ",".join(str(e) for e in direction.z),
                "generators": ",".join(str(i) for i in witness.indices),
                "point": ", ".join(witness.point),
                "values": ", ".join(witness.values),
            }
            for direction in verdict.directions
            for witness in direction.witnesses
        ]
        if rows:
            lines.append(_table(rows))
        if verdict.multipliers is not None:
            lines.append(f"multipliers r: {verdict.multipliers}")
        if verdict.term_order is not None:
            lines.append(f"term order: {verdict.term_order.order}")
            lines.append(_table([
                {
                    "class": analysis.label,
                    "generators": ",".join(str(i) for i in analysis.indices),
                    "leading coefficients": ", ".join(analysis.leading_coefficients),
                }
                for analysis in verdict.term_order.classes
            ]))
        if verdict.violation is not None:
            lines.append(f"violating class: {verdict.violation.label}")
        if verdict.unknown_directions:
            lines.append(f"unknown directions: {verdict.unknown_directions}")
        if verdict.obstruction is not None:
            lines.append(f"obstruction delta: {verdict.obstruction}")
        if verdict.note:
            lines.append(f"note: {verdict.note}")
        return lines


def _table(records) -> str:
    return pd.DataFrame.from_records(records).to_string(index=False)

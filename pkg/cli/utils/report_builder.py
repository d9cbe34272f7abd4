"""
Utilidades para construir la salida de la CLI en CSV, JSON o texto
"""
import io
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from hankel.exceptions import UsageError
from hankel.models.families import FamilyRow
from hankel.models.report import OutputFormat, VerificationReport
from hankel.utils.serialization import dumps, fraction_str

from cli.utils.cache import write_table


def render_sequence(values: Sequence[int], output_format: OutputFormat) -> str:
    """
    Prefijo de una sucesión

    CSV: un valor por línea. JSON: arreglo. Texto: valores separados por espacios.
    """
    if output_format is OutputFormat.CSV:
        return "".join(f"{value}\n" for value in values)
    if output_format is OutputFormat.JSON:
        return dumps(list(values)) + "\n"
    return " ".join(str(value) for value in values) + ("\n" if values else "")


def render_table(rows: List[FamilyRow], output_format: OutputFormat) -> str:
    """Tabla de familias con encabezado n,a,b,c,d,e,g,h,x,y"""
    if output_format is OutputFormat.JSON:
        return dumps([row.to_dict() for row in rows]) + "\n"
    buffer = io.StringIO()
    write_table(buffer, rows)
    return buffer.getvalue()


def render_report(report: VerificationReport, output_format: OutputFormat) -> str:
    """
    Reporte de verificación

    Raises:
        UsageError: Si se pide CSV para un reporte sin tabla
    """
    if output_format is OutputFormat.JSON:
        return dumps(report.to_dict()) + "\n"
    if output_format is OutputFormat.TEXT:
        return format_text_summary(report)
    rows = report.data.get("table")
    if not rows:
        raise UsageError(
            f"El subcomando {report.config.subcommand} no produce una tabla CSV",
            {"format": output_format.value},
        )
    return render_table(rows, OutputFormat.CSV)


def _format_value(value: Any) -> str:
    if isinstance(value, Fraction):
        return f"{fraction_str(value)} (~{float(value):.6f})"
    return str(value)


def format_text_summary(report: VerificationReport) -> str:
    """
    Resumen legible de un reporte

    Incluye el estado de cada comprobación y, si existe, la mejor cota de mu.
    """
    lines = [
        f"hankel {report.version} - {report.config.subcommand} ({report.config.sequence})",
        f"Estado: {report.status.value.upper()}",
        "",
    ]
    for check in report.checks:
        marker = {"pass": "[OK]", "fail": "[FALLO]", "skipped": "[OMITIDO]"}[check.status.value]
        line = f"  {marker} {check.name}"
        if check.summary:
            line += f": {check.summary}"
        if report.config.timings and check.seconds is not None:
            line += f" ({check.seconds:.2f} s)"
        lines.append(line)

    summary: Dict[str, Any] = report.data.get("summary", {})
    if summary:
        lines.append("")
        for key in sorted(summary):
            lines.append(f"  {key}: {_format_value(summary[key])}")
    return "\n".join(lines) + "\n"

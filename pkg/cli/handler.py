"""
Punto de entrada de la línea de comandos
Genera prefijos, tablas de determinantes, aproximantes de Padé y cotas
del exponente de irracionalidad, con reportes de verificación
"""
import argparse
import dataclasses
import logging
import math
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from hankel import __version__
from hankel.config import config, get_profile
from hankel.exceptions import BoundInapplicableError, HankelError, UsageError
from hankel.families import conjugation_check, family_table, nonvanishing_check, star_check, verify_lemma1, verify_prop2
from hankel.irrationality import (
    DirectAdmissibility,
    bound_ladder,
    build_convergent,
    denominator_growth,
    effective_exponent,
    error_bracket,
    get_enclosure_cache,
    lemma4_ratio,
    m0_threshold,
    merged_bound,
    paperfolding_admissibility,
    rho_delta,
    theorem1_single_l_bound,
)
from hankel.models import (
    ApproximationRecord,
    CheckResult,
    CheckStatus,
    ExponentBound,
    FamilyRow,
    OutputFormat,
    RunConfig,
    SandwichStatus,
    SequenceKind,
    SequenceSpec,
    VerificationReport,
)
from hankel.pade import RatSeries, integer_cleared, pade, verify_error_expansion
from hankel.sequences import get_sequence, paperfolding_equation, prefix
from hankel.sequences.functional_equation import FunctionalEquation
from hankel.utils.logging import configure_logging
from hankel.utils.serialization import dumps

from cli.utils.cache import get_table_cache
from cli.utils.report_builder import render_report, render_sequence, render_table

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("seq", "families", "hankel-table", "pade", "exponent")

_PAPERFOLDING_KINDS = (SequenceKind.PAPERFOLDING_CLOSED, SequenceKind.PAPERFOLDING_MORPHIC)

# Formato por defecto de cada subcomando
_DEFAULT_FORMATS = {
    "seq": OutputFormat.CSV,
    "families": OutputFormat.JSON,
    "hankel-table": OutputFormat.CSV,
    "pade": OutputFormat.JSON,
    "exponent": OutputFormat.JSON,
}

# Tolerancia del exponente efectivo frente a [delta_l, rho_l]
_EXPONENT_BAND_TOLERANCE = 0.05

# Órdenes revisados en la conjugación por U
_CONJUGATION_LIMIT = 20


@dataclasses.dataclass
class CommandOutput:
    """Texto ya renderizado y código de salida"""
    text: str
    exit_code: int = 0


class _ArgumentParser(argparse.ArgumentParser):
    """argparse que lanza UsageError en lugar de terminar el proceso"""

    def error(self, message: str):
        raise UsageError(message, {"usage": self.format_usage().strip()})


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ejecuta un subcomando

    Args:
        argv: Argumentos (por defecto sys.argv[1:])

    Returns:
        0 si todas las comprobaciones pasan, 1 si alguna falla,
        2 en errores de uso, 3 en errores internos
    """
    start_time = time.perf_counter()
    try:
        args = _parse_args(argv)
        configure_logging(args.log_level)
        run = build_run_config(args)
        logger.info("Ejecutando %s con %s", run.subcommand, run.to_dict())

        output = COMMANDS[run.subcommand](run)
        logger.info("%s terminado en %.2f s", run.subcommand, time.perf_counter() - start_time)
        return success_response(output, run)

    except HankelError as e:
        logger.error("%s: %s", type(e).__name__, e.message)
        return error_response(e)
    except Exception as e:
        logger.exception("Error inesperado: %s", e)
        return error_response(e)


def _positive(name: str, minimum: int = 1) -> Callable[[str], int]:
    def parse(value: str) -> int:
        try:
            number = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} debe ser un entero")
        if number < minimum:
            raise argparse.ArgumentTypeError(f"{name} debe ser >= {minimum}")
        return number
    return parse


def _parse_ladder(value: str) -> List[int]:
    parts = value.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--ladder espera inicio:fin:paso")
    try:
        start, stop, step = (int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("--ladder espera enteros")
    if start < 1 or step < 1 or stop < start:
        raise argparse.ArgumentTypeError("--ladder requiere 1 <= inicio <= fin y paso >= 1")
    return [start, stop, step]


def _parse_args(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    parser = _ArgumentParser(prog="hankel", description="Determinantes de Hankel de sucesiones automáticas")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--name", "--sequence", dest="sequence", default="paperfolding")
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
    common.add_argument("--output", type=Path)
    common.add_argument("--cache-dir", type=Path)
    common.add_argument("--jobs", type=_positive("--jobs"), default=config.execution.jobs)
    common.add_argument("--profile", choices=("desk", "acceptance"), default="desk")
    common.add_argument("--no-timings", dest="timings", action="store_false")
    common.add_argument("--log-level", default=config.execution.log_level)

    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=_ArgumentParser)

    seq = subparsers.add_parser("seq", parents=[common], help="Prefijo de una sucesión")
    seq.add_argument("--n", type=_positive("--n", 0), required=True)

    families = subparsers.add_parser("families", parents=[common], help="Familias orladas y verificación")
    families.add_argument("--max-n", dest="n_max", type=_positive("--max-n"), required=True)
    families.add_argument("--verify-lemma1", action="store_true")
    families.add_argument("--verify-prop2", action="store_true")
    families.add_argument("--verify-star", action="store_true")
    families.add_argument(
        "--table-output", dest="table_output", type=Path, help="Escribe también la tabla CSV en esta ruta"
    )

    table = subparsers.add_parser("hankel-table", parents=[common], help="Tabla exacta de las nueve familias")
    table.add_argument("--max-n", dest="n_max", type=_positive("--max-n"), required=True)

    pade_parser = subparsers.add_parser("pade", parents=[common], help="Aproximante de Padé [k-1/k]")
    pade_parser.add_argument("--k", type=_positive("--k"), required=True)
    pade_parser.add_argument("--verify", action="store_true")

    exponent = subparsers.add_parser("exponent", parents=[common], help="Convergentes y cotas de mu")
    exponent.add_argument("--b", type=_positive("--b", 2), default=config.irrationality.default_base)
    exponent.add_argument("--l", type=_positive("--l"))
    exponent.add_argument("--m-max", dest="m_max", type=_positive("--m-max"))
    exponent.add_argument("--ladder", type=_parse_ladder)
    exponent.add_argument("--merged", action="store_true")
    exponent.add_argument("--L", dest="L", type=_positive("--L", 2))

    return parser.parse_args(argv)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Construye RunConfig desde los argumentos sobre la configuración global

    Raises:
        UsageError: Si la combinación de parámetros no es válida
    """
    subcommand = args.subcommand
    output_format = OutputFormat(args.output_format) if args.output_format else _DEFAULT_FORMATS[subcommand]
    run = RunConfig(
        subcommand=subcommand,
        sequence=args.sequence,
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        k=getattr(args, "k", None),
        l=getattr(args, "l", None),
        m_max=getattr(args, "m_max", None),
        b=getattr(args, "b", config.irrationality.default_base),
        L=getattr(args, "L", None),
        ladder=getattr(args, "ladder", None),
        merged=getattr(args, "merged", False),
        verify=getattr(args, "verify", False),
        verify_lemma1=getattr(args, "verify_lemma1", False),
        verify_prop2=getattr(args, "verify_prop2", False),
        verify_star=getattr(args, "verify_star", False),
        output=args.output,
        table_output=getattr(args, "table_output", None),
        output_format=output_format,
        cache_dir=args.cache_dir,
        jobs=args.jobs,
        timings=args.timings,
        profile=args.profile,
    )
    # Valida el nombre antes de calcular nada
    get_sequence(run.sequence)
    if subcommand == "families" and run.n_max < config.families.min_n_max:
        raise UsageError(
            f"families requiere --max-n >= {config.families.min_n_max} para las comprobaciones de periodo 10",
            {"max_n": run.n_max},
        )
    if subcommand == "exponent":
        if run.l is None and run.ladder is None and not run.merged:
            raise UsageError("exponent requiere --l, --ladder o --merged")
        if run.merged and run.L is None:
            raise UsageError("--merged requiere --L")
        if run.l is not None and run.m_max is None:
            run.m_max = get_profile(run.profile).m_max
    return run


def _timed(func: Callable[[], Any]) -> Tuple[Any, float]:
    start = time.perf_counter()
    result = func()
    return result, time.perf_counter() - start


def _status(passed: bool) -> CheckStatus:
    return CheckStatus.PASS if passed else CheckStatus.FAIL


def _is_paperfolding(spec: SequenceSpec) -> bool:
    return spec.kind in _PAPERFOLDING_KINDS


def load_table(run: RunConfig, spec: SequenceSpec, seq: Sequence[int], n_max: int) -> List[FamilyRow]:
    """Tabla exacta desde el caché o calculada y guardada"""
    cache = get_table_cache(run.cache_dir)
    rows = cache.get(spec.name, n_max)
    if rows is None:
        rows = family_table(seq, n_max, run.jobs)
        cache.set(spec.name, n_max, rows)
    return rows


def cmd_seq(run: RunConfig) -> CommandOutput:
    """Emite el prefijo de la sucesión"""
    spec = get_sequence(run.sequence)
    return CommandOutput(render_sequence(prefix(spec, run.n), run.output_format))


def cmd_hankel_table(run: RunConfig) -> CommandOutput:
    """Emite la tabla exacta n,a,b,c,d,e,g,h,x,y"""
    spec = get_sequence(run.sequence)
    seq = prefix(spec, 2 * run.n_max + 3)
    rows = load_table(run, spec, seq, run.n_max)
    output_format = OutputFormat.JSON if run.output_format is OutputFormat.JSON else OutputFormat.CSV
    return CommandOutput(render_table(rows, output_format))


def cmd_families(run: RunConfig) -> VerificationReport:
    """
    Tabla exacta de las familias y comprobaciones pedidas

    La tabla exacta llega hasta min(n_max, lemma1_n_max del perfil); las
    comprobaciones módulo 2 llegan hasta n_max. Con --table-output la tabla
    CSV se escribe además del reporte.
    """
    profile = get_profile(run.profile)
    spec = get_sequence(run.sequence)
    seq = prefix(spec, 4 * run.n_max + 8)
    report = VerificationReport(run)
    table_n = min(run.n_max, profile.lemma1_n_max)
    rows, seconds = _timed(lambda: load_table(run, spec, seq, table_n))
    logger.info("Tabla exacta hasta n=%d lista en %.2f s", table_n, seconds)
    report.data["table"] = rows
    report.data["table_n_max"] = table_n
    if run.table_output is not None:
        _write(render_table(rows, OutputFormat.CSV), run.table_output)
    paperfolding = _is_paperfolding(spec)
    skipped = f"sólo definido para el plegado de papel, no para {run.sequence}"

    if run.verify_lemma1:
        if not paperfolding:
            report.add(CheckResult("lemma1", CheckStatus.SKIPPED, skipped))
        else:
            lemma, seconds = _timed(lambda: verify_lemma1(seq, table_n, rows=rows))
            identity2 = lemma.resolution(2)
            report.add(CheckResult(
                name="lemma1",
                status=_status(lemma.passed),
                summary=f"18 identidades para 2n+1 <= {table_n}; identidad (2) con variante {identity2.variant}",
                witness={
                    "resolutions": [res.to_dict() for res in lemma.resolutions],
                    "failures": [c.to_dict() for c in lemma.checks if c.status is CheckStatus.FAIL][:50],
                    "mod2_failures": [c.to_dict() for c in lemma.mod2_checks if c.status is CheckStatus.FAIL][:50],
                },
                seconds=seconds,
            ))

    if run.verify_prop2:
        if not paperfolding:
            report.add(CheckResult("prop2", CheckStatus.SKIPPED, skipped))
        else:
            prop2, seconds = _timed(lambda: verify_prop2(seq, run.n_max))
            report.add(CheckResult(
                name="prop2",
                status=_status(prop2.passed),
                summary=f"{len(prop2.deviations)} desviaciones de la tabla de periodo 10 para n <= {run.n_max}",
                witness=prop2.to_dict(),
                seconds=seconds,
            ))
            limit = min(run.n_max, _CONJUGATION_LIMIT)
            failures, seconds = _timed(lambda: conjugation_check(seq, limit))
            report.add(CheckResult(
                name="block-conjugation",
                status=_status(not failures),
                summary=f"conjugación por U para n <= {limit}",
                witness={"failures": failures},
                seconds=seconds,
            ))

    if run.verify_star:
        exact_limit = min(run.n_max, profile.exact_limit)
        if paperfolding:
            star, seconds = _timed(lambda: star_check(seq, run.n_max, exact_limit))
            report.add(CheckResult(
                name="star",
                status=_status(star.passed),
                summary=f"{star.pairs_checked} pares H_(10i+1) H_(10i+2) impares; H_n != 0 para n <= {exact_limit}",
                witness=star.to_dict(),
                seconds=seconds,
            ))
        else:
            nonzero, seconds = _timed(lambda: nonvanishing_check(seq, exact_limit))
            report.add(CheckResult(
                name="nonvanishing",
                status=_status(nonzero.passed),
                summary=f"H_n != 0 para n <= {exact_limit}",
                witness=nonzero.to_dict(),
                seconds=seconds,
            ))
    return report


def cmd_pade(run: RunConfig) -> VerificationReport:
    """Aproximante [k-1/k] y, con --verify, la expansión del error"""
    spec = get_sequence(run.sequence)
    order = 2 * run.k + 2 + config.pade.series_margin
    series = RatSeries.from_sequence(prefix(spec, order))
    ap, seconds = _timed(lambda: pade(series, run.k))
    P, Q = integer_cleared(ap)
    report = VerificationReport(run)
    report.data["approximant"] = ap
    report.data["cleared"] = {"P": [str(c) for c in P.coeffs], "Q": [str(c) for c in Q.coeffs]}
    report.data["summary"] = {"k": run.k, "h": ap.h, "H_k": ap.hankel_k, "H_k+1": ap.hankel_k1}
    if run.verify:
        check, seconds = _timed(lambda: verify_error_expansion(series, ap))
        report.add(CheckResult(
            name="error-expansion",
            status=_status(check.holds),
            summary=f"f - P/Q = h z^{2 * run.k} + O(z^{2 * run.k + 1})",
            witness=check.to_dict(),
            seconds=seconds,
        ))
    return report


def _convergent_records(fe: FunctionalEquation, l: int, m_max: int, b: int) -> Tuple[Any, int, List[ApproximationRecord]]:
    series = RatSeries.from_sequence(prefix(fe.sequence, 2 * l + 2 + config.pade.series_margin))
    ap = pade(series, l)
    m0 = m0_threshold(fe, ap)
    cache = get_enclosure_cache()
    records: List[ApproximationRecord] = []
    for m in range(1, m_max + 1):
        record = build_convergent(fe, ap, m, b)
        record = error_bracket(record, fe, ap, cache=cache, m0=m0)
        exponent = effective_exponent(record)
        records.append(dataclasses.replace(record, eff_exp=exponent.value, eff_exp_interval=(exponent.lo, exponent.hi)))
        logger.info("Convergente l=%d m=%d: exponente efectivo %.4f", l, m, exponent.value)
    return ap, m0, records


def _single_bound(fe: FunctionalEquation, l: int, notes: List[str]) -> Optional[ExponentBound]:
    admissibility = paperfolding_admissibility()
    if not admissibility(l):
        admissibility = DirectAdmissibility(prefix(fe.sequence, 2 * l + 3))
        if not admissibility(l):
            notes.append(f"l = {l}: H_l H_(l+1) = 0, sin cota")
            return None
    try:
        return theorem1_single_l_bound(fe, l, admissibility)
    except BoundInapplicableError as e:
        notes.append(e.message)
        return None


def _coverage_radius(admissible: List[int], window: Tuple[int, int]) -> int:
    low, high = window
    gaps = [b - a for a, b in zip(admissible, admissible[1:])]
    inner = math.ceil(max(gaps) / 2) if gaps else 0
    return max(admissible[0] - low, high - admissible[-1], inner)


def cmd_exponent(run: RunConfig) -> VerificationReport:
    """
    Convergentes, encaje del error, exponentes efectivos y cotas de mu

    Sólo está disponible la ecuación funcional del plegado de papel.
    """
    spec = get_sequence(run.sequence)
    if not _is_paperfolding(spec):
        raise UsageError(
            f"No hay ecuación funcional conocida para {run.sequence}",
            {"supported": ["paperfolding", "paperfolding-closed", "paperfolding-morphic"]},
        )
    fe = paperfolding_equation()
    report = VerificationReport(run)
    report.data["functional_equation"] = fe
    bounds: List[ExponentBound] = []
    notes: List[str] = []

    if run.l is not None:
        (ap, m0, records), seconds = _timed(lambda: _convergent_records(fe, run.l, run.m_max, run.b))
        report.data["pade"] = ap
        report.data["m0"] = m0
        report.data["records"] = records
        statuses = {r.m: r.sandwich.value for r in records}
        report.add(CheckResult(
            name="sandwich",
            status=_status(all(r.sandwich is not SandwichStatus.FAIL for r in records)),
            summary=f"l={run.l}, m0={m0}, m=1..{run.m_max}",
            witness={"statuses": statuses},
            seconds=seconds,
        ))
        growth = denominator_growth(records, fe.k)
        report.data["denominator_growth"] = growth
        report.add(CheckResult(
            name="denominator-growth",
            status=_status(growth.holds),
            summary=f"q/b^(Y k^m) en [{float(growth.scaled_min):.6g}, {float(growth.scaled_max):.6g}]",
            witness=growth.to_dict(),
        ))
        rho, delta = rho_delta(fe, run.l)
        last = records[-1]
        lo, hi = last.eff_exp_interval
        if last.m < m0:
            band_status = CheckStatus.SKIPPED
        else:
            band_status = _status(
                lo >= float(delta) - _EXPONENT_BAND_TOLERANCE and hi <= float(rho) + _EXPONENT_BAND_TOLERANCE
            )
        report.add(CheckResult(
            name="effective-exponent",
            status=band_status,
            summary=f"m={last.m}: [{lo:.6f}, {hi:.6f}] frente a [delta, rho] = [{float(delta):.6f}, {float(rho):.6f}]",
            witness={"m": last.m, "lo": lo, "hi": hi, "delta": delta, "rho": rho},
        ))
        single = _single_bound(fe, run.l, notes)
        if single is not None:
            bounds.append(single)

    if run.ladder is not None:
        start, stop, step = run.ladder
        ladder, seconds = _timed(lambda: bound_ladder(fe, start, stop, step, paperfolding_admissibility()))
        values = [bound.mu_bound for bound in ladder]
        decreasing = all(b < a for a, b in zip(values, values[1:]))
        above = all(value > 2 * fe.k for value in values)
        report.data["ladder"] = ladder
        report.add(CheckResult(
            name="bound-ladder",
            status=_status(decreasing and above),
            summary=f"{len(ladder)} cotas para l = {start}..{stop} paso {step}",
            witness={"strictly_decreasing": decreasing, "all_above_2k": above, "first": values[0] if values else None},
            seconds=seconds,
        ))
        bounds.extend(ladder)

    if run.merged:
        admissibility = paperfolding_admissibility()
        merged, seconds = _timed(lambda: merged_bound(fe, run.L, admissibility))
        radius = _coverage_radius(merged.admissible, merged.window)
        coverage = lemma4_ratio(merged.admissible, fe.k, run.L, radius, config.irrationality.lemma4_horizon)
        report.data["merged"] = merged
        report.data["lemma4"] = coverage
        report.add(CheckResult(
            name="merged-bound",
            status=_status(coverage.holds),
            summary=f"L={run.L}: mu <= {float(merged.mu_bound):.6f}",
            witness={"epsilon": merged.epsilon, "radius": radius, "admissible_count": len(merged.admissible)},
            seconds=seconds,
        ))
        bounds.append(merged)

    summary: Dict[str, Any] = {}
    if bounds:
        best = min(bounds, key=lambda bound: bound.mu_bound)
        summary["best_mu"] = best.mu_reported
        summary["best_mu_source"] = best.label
    if run.l is not None:
        summary["last_effective_exponent"] = report.data["records"][-1].eff_exp
    report.data["summary"] = summary
    report.data["notes"] = notes
    return report


COMMANDS: Dict[str, Callable[[RunConfig], Any]] = {
    "seq": cmd_seq,
    "families": cmd_families,
    "hankel-table": cmd_hankel_table,
    "pade": cmd_pade,
    "exponent": cmd_exponent,
}


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info("Salida escrita en %s", output)


def error_response(error: Exception) -> int:
    """Escribe el error estructurado en stderr y devuelve el código de salida"""
    if isinstance(error, HankelError):
        payload, exit_code = error.to_dict(), error.exit_code
    else:
        payload = {"error": type(error).__name__, "message": str(error), "details": {}}
        exit_code = 3
    sys.stderr.write(dumps(payload) + "\n")
    return exit_code


def success_response(result: Any, run: RunConfig) -> int:
    """Escribe la salida; 0 si el reporte pasa, 1 si alguna comprobación falla"""
    if isinstance(result, CommandOutput):
        _write(result.text, run.output)
        return result.exit_code
    _write(render_report(result, run.output_format), run.output)
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())

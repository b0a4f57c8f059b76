"""Kommandolinje for ctcodes: construct, cosets, graph, group og verify-all."""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .api.adapters import (
    CodeAdapter, CosetAdapter, GraphAdapter, GroupAdapter, VerificationAdapter, dump, dump_many,
)
from .construct import Code, CodeFactory, WeightClassPair
from .cosets import coset_profile
from .graphs import classify, coset_graph, export_graph
from .schemas.report_schemas import OutputFormat, RunConfig, Task
from .symplectic import (
    all_transvections, extended_group, gl_orbit_check_even_part, group_closure, induced_action,
    orbit_count, orbit_count_extended,
)
from .verification import VerificationSuite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2

_DEFAULT_FORMATS = {
    Task.CONSTRUCT: OutputFormat.TEXT,
    Task.COSETS: OutputFormat.JSON,
    Task.GRAPH: OutputFormat.DOT,
    Task.GROUP: OutputFormat.JSON,
    Task.VERIFY_ALL: OutputFormat.JSON,
}


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    task = Task(args.command)
    fmt = args.format or _DEFAULT_FORMATS[task].value
    return RunConfig(
        m=args.m,
        pair=args.pair,
        tasks=[task],
        extended=getattr(args, "extended", False),
        format=fmt,
        out=args.out,
        threads=args.threads,
        heavy=getattr(args, "heavy", False),
        skip_group=getattr(args, "skip_group", False),
        gl_check=getattr(args, "gl_check", False),
        dump=getattr(args, "dump", None),
    )


def _code_for(config: RunConfig, pair: WeightClassPair) -> Code:
    if config.extended:
        return CodeFactory.extended_weight_class_code(config.m, pair)
    return CodeFactory.weight_class_code(config.m, pair)


def _file_stem(config: RunConfig, pair: WeightClassPair) -> str:
    """F.eks. 'C01_m4' eller 'C12ext_m4'."""
    suffix = "ext" if config.extended else ""
    return f"C{pair.i1}{pair.i2}{suffix}_m{config.m}"


def _emit(text: str, out: Optional[str]) -> None:
    """Skriver til fil når out er gitt, ellers til standard ut."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Skrev %s", path)
    else:
        sys.stdout.write(text)


def _out_dir(config: RunConfig) -> Optional[Path]:
    if not config.out:
        return None
    directory = Path(config.out)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def cmd_construct(config: RunConfig) -> int:
    """Skriver paritetsmatriser i tekstformatet og kodesammendrag."""
    if config.format not in (OutputFormat.TEXT, OutputFormat.JSON):
        raise ValueError(f"construct støtter formatene text og json, fikk {config.format.value}")
    pairs = WeightClassPair.parse_selection(config.pair)
    directory = _out_dir(config)
    summaries = []
    lines: List[str] = []
    for pair in pairs:
        code = _code_for(config, pair)
        summary = CodeAdapter.to_output(code, pair)
        summaries.append(summary)
        matrix_text = code.parity.to_text()
        if directory is not None:
            (directory / f"{_file_stem(config, pair)}.txt").write_text(matrix_text, encoding="utf-8")
            lines.append(f"{code.name}: {summary.summary}\n")
        else:
            lines.append(matrix_text + f"{code.name}: {summary.summary}\n")

    if config.format == OutputFormat.JSON:
        sys.stdout.write(dump(summaries[0]) if len(summaries) == 1 else dump_many(summaries))
    else:
        sys.stdout.write("".join(lines))
    return EXIT_OK


def cmd_cosets(config: RunConfig) -> int:
    """Sideklasseprofil og skjæringsmatrise for hvert valgte par."""
    outputs = []
    lines: List[str] = []
    for pair in WeightClassPair.parse_selection(config.pair):
        code = _code_for(config, pair)
        profile = coset_profile(code)
        output = CosetAdapter.to_output(profile)
        outputs.append(output)
        array = output.intersection_array.text if output.intersection_array else "ikke regulær"
        lines.append(f"{code.name}: {code.summary()} rho={output.rho} {array}\n")

    if config.format == OutputFormat.TEXT:
        _emit("".join(lines), config.out)
    elif config.format == OutputFormat.JSON:
        _emit(dump(outputs[0]) if len(outputs) == 1 else dump_many(outputs), config.out)
    else:
        raise ValueError(f"cosets støtter formatene text og json, fikk {config.format.value}")
    return EXIT_OK


def cmd_graph(config: RunConfig) -> int:
    """Sideklassegraf som DOT/JSON/naboliste og klassifisering."""
    directory = _out_dir(config)
    classifications = []
    for pair in WeightClassPair.parse_selection(config.pair):
        code = _code_for(config, pair)
        graph = coset_graph(code, threads=config.threads)
        classification = GraphAdapter.to_output(classify(graph))
        classifications.append(classification)
        if config.format == OutputFormat.TEXT:
            continue
        data = export_graph(graph, config.format.value)
        if directory is not None:
            stem = _file_stem(config, pair)
            (directory / f"{stem}.{config.format.value}").write_bytes(data)
            (directory / f"{stem}.classification.json").write_text(dump(classification), encoding="utf-8")
        elif config.format != OutputFormat.JSON:
            sys.stdout.write(data.decode("utf-8"))

    if config.format == OutputFormat.TEXT:
        for classification in classifications:
            for key, value in classification.model_dump(exclude={"schema_version"}).items():
                sys.stdout.write(f"{key}: {value}\n")
    elif config.format == OutputFormat.JSON or directory is not None:
        sys.stdout.write(dump(classifications[0]) if len(classifications) == 1
                         else dump_many(classifications))
    return EXIT_OK


def cmd_group(config: RunConfig) -> int:
    """Transveksjonsgrupper, lukning (når tillatt) og baneopptelling."""
    if config.format != OutputFormat.JSON:
        raise ValueError(f"group støtter bare formatet json, fikk {config.format.value}")
    m = config.m
    generators = all_transvections(m)
    closure = group_closure(generators, threads=config.threads) if config.closure_allowed() else None
    extended = extended_group(m, closure) if closure is not None else None
    if config.dump:
        if closure is None:
            raise ValueError("--dump krever full lukning (m = 4, eller m = 6 med --heavy)")
        _emit(closure.dump_hex(), config.dump)
    gl_orbits = gl_orbit_check_even_part(m) if config.gl_check else None

    outputs = []
    for pair in WeightClassPair.parse_selection(config.pair):
        orbits = extended_orbits = None
        if pair.parity_flag:
            code = CodeFactory.weight_class_code(m, pair)
            elements = closure if closure is not None and m == 4 else generators
            orbits = orbit_count(induced_action(elements, code.parity), code)
            if 0 not in pair.classes:
                extended_orbits = orbit_count_extended(m, pair, closure)
        outputs.append(GroupAdapter.to_output(
            m, len(generators), closure, extended, orbits, extended_orbits, gl_orbits,
        ))
    _emit(dump(outputs[0]) if len(outputs) == 1 else dump_many(outputs), config.out)
    return EXIT_OK


def cmd_verify_all(config: RunConfig) -> int:
    """Kjører påstandssuiten; 0 når alt består, 1 ved feilede påstander."""
    report = VerificationSuite(config).run()
    if config.format == OutputFormat.TEXT:
        _emit(VerificationAdapter.to_text(report), config.out)
    elif config.format == OutputFormat.JSON:
        _emit(VerificationAdapter.to_json(report), config.out)
    else:
        raise ValueError(f"verify-all støtter formatene text og json, fikk {config.format.value}")
    for claim in report.claims:
        if claim.status.value == "fail":
            logger.error("Feilet påstand: %s", claim.claim)
    return EXIT_OK if report.all_passed else EXIT_CLAIM_FAILURE


_COMMANDS = {
    Task.CONSTRUCT: cmd_construct,
    Task.COSETS: cmd_cosets,
    Task.GRAPH: cmd_graph,
    Task.GROUP: cmd_group,
    Task.VERIFY_ALL: cmd_verify_all,
}


def _add_common_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("-m", type=int, default=4, help="Antall rader i H_m (partall, 4..12)")
    cmd.add_argument("--pair", default="all", help="Vektklassepar 'i,j' eller 'all'")
    cmd.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                     help="Utdataformat (standard avhenger av kommandoen)")
    cmd.add_argument("--out", default=None, help="Utdatafil eller katalog")
    cmd.add_argument("--threads", type=int, default=1, help="Antall arbeidstråder")


def _add_group_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--heavy", action="store_true", help="Tillat full gruppelukning for m = 6")
    cmd.add_argument("--skip-group", action="store_true", help="Hopp over gruppepåstander")
    cmd.add_argument("--gl-check", action="store_true", help="Baner under hele GL(4,2) (m = 4)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctcodes", description="Verifikasjon av fullstendig transitive binære koder",
    )
    parser.add_argument("--log-level", default="WARNING", help="Loggnivå (DEBUG, INFO, WARNING, ERROR)")

    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="Bygg paritetsmatriser og kodesammendrag")
    _add_common_flags(construct)
    construct.add_argument("--extended", action="store_true", help="Bygg den utvidede koden")

    cosets = sub.add_parser("cosets", help="Sideklasseprofil og skjæringsmatrise")
    _add_common_flags(cosets)
    cosets.add_argument("--extended", action="store_true", help="Bruk den utvidede koden")

    graph = sub.add_parser("graph", help="Sideklassegraf og klassifisering")
    _add_common_flags(graph)
    graph.add_argument("--extended", action="store_true", help="Bruk den utvidede koden")

    group = sub.add_parser("group", help="Gruppelukning og baneopptelling")
    _add_common_flags(group)
    _add_group_flags(group)
    group.add_argument("--dump", default=None, help="Fil for heksdump av lukningen")

    verify = sub.add_parser("verify-all", help="Kjør alle påstander")
    _add_common_flags(verify)
    _add_group_flags(verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)
    seed = os.environ.get("CT_CODES_SEED")
    if seed is not None:
        logger.debug("CT_CODES_SEED=%s (reservert, ikke brukt)", seed)

    try:
        config = _config_from_args(args)
    except ValidationError as exc:
        for error in exc.errors():
            sys.stderr.write(f"ctcodes: {error['msg']}\n")
        return EXIT_USAGE

    try:
        return _COMMANDS[config.tasks[0]](config)
    except ValueError as exc:
        sys.stderr.write(f"ctcodes: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

import argparse
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from src.utils.commands import COMMAND_TABLE, CommandContext, CommandHandler, find_command, render_document
from src.utils.config import ConfigManager
from src.utils.errors import InstkitError, InvalidStructure, ResourceBoundExceeded
from src.utils.file_handler import write_text_atomic
from src.utils.logger import Logger
from src.utils.report_writer import FORMATS, write_report

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", type=Path, default=None, help="Write the produced document here")
    common.add_argument("--format", choices=FORMATS, default=None, help="Report format (default from config)")
    common.add_argument("--cap", type=int, default=None, help="Enumeration cap (overrides INSTKIT_CAP)")
    common.add_argument("--seed", type=int, default=0, help="Seed for the random generators")
    common.add_argument("--config", type=Path, default=None, help="Configuration file")
    common.add_argument("--quiet", action="store_true", help="No log lines on stderr")
    return common


def create_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="instkit", description="Finite institutions, π-institutions and the G ⊣ F adjunction")
    common = _common_options()
    groups = parser.add_subparsers(dest="group", required=True)
    group_parsers = {}
    for spec in COMMAND_TABLE:
        if spec.name is None:
            leaf = groups.add_parser(spec.group, parents=[common], help=spec.help)
        else:
            if spec.group not in group_parsers:
                group_parsers[spec.group] = groups.add_parser(spec.group).add_subparsers(dest="name", required=True)
            leaf = group_parsers[spec.group].add_parser(spec.name, parents=[common], help=spec.help)
        for names, options in spec.arguments:
            leaf.add_argument(*names, **options)
    return parser


def run_command(argv: List[str], stdout: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    parser = create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code == 0 else EXIT_USAGE

    logger = Logger(quiet=args.quiet)
    try:
        config = ConfigManager(args.config)
        context = CommandContext(
            cap=config.resolve_cap(args.cap),
            search_bound=config.search_bound,
            formula_bound=config.formula_bound,
            seed=args.seed,
            output=args.output,
            random_limits=config.random_limits,
        )
        logger = Logger(config.log_file, quiet=args.quiet)
        fmt = args.format or config.report_format
        spec = find_command(args.group, getattr(args, "name", None))
        result = CommandHandler(context, logger).execute(spec, args)
    except ResourceBoundExceeded as e:
        logger.bound(str(e))
        return EXIT_RESOURCE
    except InvalidStructure as e:
        logger.error(str(e))
        if e.report is None:
            return EXIT_USAGE
        stdout.write(write_report(e.report, args.format or "text"))
        return EXIT_FAIL
    except (InstkitError, FileNotFoundError, ValueError) as e:
        logger.error(str(e))
        return EXIT_USAGE

    if result.document is not None:
        if context.output:
            write_text_atomic(context.output, render_document(result.document))
            logger.success(f"wrote {context.output}")
        elif result.report is None:
            stdout.write(render_document(result.document))
    if result.text is not None:
        stdout.write(result.text)
    if result.report is None:
        return EXIT_PASS
    stdout.write(write_report(result.report, fmt))
    if not result.report.ok:
        logger.warning(f"{len(result.report.violations)} violations")
        return EXIT_FAIL
    logger.success(result.report.status.value)
    return EXIT_PASS


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command line front end for centra."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import voluptuous as vol

from .catalog import DEFAULT_CATALOG, group_order
from .const import (
    DEFAULT_ORDER_CAP,
    DOMAIN,
    ENV_ORDER_CAP,
    EXIT_FAILURES,
    EXIT_OK,
    EXIT_USAGE,
    FORMAT_TEXT,
    FORMATS,
)
from .groups import CentraError, OrderCapExceeded, format_spec, parse_spec
from .groups.const import ELEMENT_CAP
from .report import (
    render_catalog,
    render_experiment,
    render_profiles,
    render_reports,
)
from .suite import conjecture_experiment, run_suite
from .theorems import THEOREM_IDS, SuiteConfig, profile

_LOGGER = logging.getLogger(__name__)

CMD_COMPUTE = "compute"
CMD_VERIFY = "verify"
CMD_EXPERIMENT = "experiment"
CMD_CATALOG = "catalog"
COMMANDS = (CMD_COMPUTE, CMD_VERIFY, CMD_EXPERIMENT, CMD_CATALOG)


def _canonical(text: str) -> str:
    return format_spec(parse_spec(text))


def _catalog_name(text: str) -> str:
    try:
        name = _canonical(text)
    except CentraError as err:
        raise vol.Invalid(str(err)) from err
    if name not in DEFAULT_CATALOG:
        raise vol.Invalid(f"{text} is not a catalog group")
    return name


CLI_CONFIG_SCHEMA = vol.Schema(
    {
        vol.Required("command"): vol.In(COMMANDS),
        vol.Optional("specs", default=[]): [str],
        vol.Optional("theorem_ids", default=None): vol.Any(
            None, [vol.In(THEOREM_IDS)]
        ),
        vol.Optional("groups", default=None): vol.Any(None, [_catalog_name]),
        vol.Required("order_cap"): vol.All(
            vol.Coerce(int), vol.Range(min=2, max=ELEMENT_CAP)
        ),
        vol.Required("jobs"): vol.All(vol.Coerce(int), vol.Range(min=1)),
        vol.Required("format"): vol.In(FORMATS),
        vol.Optional("output_path", default=None): vol.Any(None, str),
        vol.Optional("verbose", default=False): bool,
    }
)


def _split(values: Sequence[str] | None) -> list[str] | None:
    """Accept both repeated flags and comma separated lists."""
    if values is None:
        return None
    return [
        item.strip()
        for value in values
        for item in value.split(",")
        if item.strip()
    ]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=FORMATS, default=FORMAT_TEXT, dest="format"
    )
    common.add_argument("--output", dest="output_path", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog=DOMAIN,
        description="Centralizer invariants of finite groups.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser(
        CMD_COMPUTE, parents=[common], help="profile group specs"
    )
    compute.add_argument("specs", nargs="+", metavar="SPEC")
    compute.add_argument("--order-cap", dest="order_cap", default=None)

    verify = commands.add_parser(
        CMD_VERIFY, parents=[common], help="run the theorem suite"
    )
    verify.add_argument(
        "--theorems", dest="theorem_ids", action="append", default=None
    )
    verify.add_argument(
        "--groups", dest="groups", action="append", default=None
    )
    verify.add_argument("--order-cap", dest="order_cap", default=None)
    verify.add_argument("--jobs", dest="jobs", default=os.cpu_count() or 1)

    experiment = commands.add_parser(
        CMD_EXPERIMENT,
        parents=[common],
        help="|2-Cent| of the simple catalog groups",
    )
    experiment.add_argument("--order-cap", dest="order_cap", default=None)

    commands.add_parser(
        CMD_CATALOG, parents=[common], help="list the group catalog"
    )
    return parser


def parse_config(argv: Sequence[str] | None = None) -> dict[str, Any]:
    """Parse and validate arguments; raises vol.Invalid on bad values."""
    args = vars(build_parser().parse_args(argv))
    order_cap = args.get("order_cap")
    if order_cap is None:
        order_cap = os.environ.get(ENV_ORDER_CAP, DEFAULT_ORDER_CAP)
    raw = {
        "command": args["command"],
        "specs": args.get("specs") or [],
        "theorem_ids": _split(args.get("theorem_ids")),
        "groups": _split(args.get("groups")),
        "order_cap": order_cap,
        "jobs": args.get("jobs", 1),
        "format": args["format"],
        "output_path": args["output_path"],
        "verbose": args["verbose"],
    }
    return CLI_CONFIG_SCHEMA(raw)


def cmd_compute(config: dict[str, Any]) -> tuple[str, int]:
    profiles = []
    for text in config["specs"]:
        try:
            name = _canonical(text)
            order = group_order(name)
            if order > config["order_cap"]:
                raise OrderCapExceeded(
                    f"order {order} exceeds cap {config['order_cap']}"
                )
            profiles.append(profile(name))
        except CentraError as err:
            raise CentraError(f"{text}: {err}") from err
    return render_profiles(profiles, config["format"]), EXIT_OK


def cmd_verify(config: dict[str, Any]) -> tuple[str, int]:
    suite_config = SuiteConfig(
        theorem_ids=(
            None
            if config["theorem_ids"] is None
            else tuple(config["theorem_ids"])
        ),
        catalog_names=(
            None if config["groups"] is None else tuple(config["groups"])
        ),
        order_cap=config["order_cap"],
        jobs=config["jobs"],
    )
    reports = run_suite(suite_config)
    failed = [report.theorem_id for report in reports if not report.ok]
    if failed:
        _LOGGER.error("Failures in %s", ", ".join(failed))
    status = EXIT_FAILURES if failed else EXIT_OK
    return render_reports(reports, config["format"]), status


def cmd_experiment(config: dict[str, Any]) -> tuple[str, int]:
    report = conjecture_experiment(order_cap=config["order_cap"])
    return render_experiment(report, config["format"]), EXIT_OK


def cmd_catalog(config: dict[str, Any]) -> tuple[str, int]:
    return render_catalog(DEFAULT_CATALOG, config["format"]), EXIT_OK


HANDLERS = {
    CMD_COMPUTE: cmd_compute,
    CMD_VERIFY: cmd_verify,
    CMD_EXPERIMENT: cmd_experiment,
    CMD_CATALOG: cmd_catalog,
}


def _write(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
        return
    Path(output_path).write_text(text, encoding="utf-8")
    _LOGGER.info("Report written to %s", output_path)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors and 0 on --help
        return int(err.code or 0)
    except (vol.Invalid, CentraError) as err:
        print(f"{DOMAIN}: {err}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if config["verbose"] else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        text, status = HANDLERS[config["command"]](config)
    except CentraError as err:
        print(f"{DOMAIN}: {err}", file=sys.stderr)
        return EXIT_USAGE
    _write(text, config["output_path"])
    return status


if __name__ == "__main__":
    sys.exit(main())

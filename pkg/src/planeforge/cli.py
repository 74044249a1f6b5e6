# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Command line
------------
Every command prints JSON (or a text table) on standard output; logging
goes to standard error. Exit codes: 0 success, 1 failed verification,
2 usage error, 3 domain or field error, 4 budget exceeded.
"""
import logging
import sys

import click

from planeforge.constants import BUDGET_ENV_VAR
from planeforge.exceptions import (BudgetExceededError, DomainError,
                                   FieldValidationError, UsageError,
                                   VerificationError)
from planeforge.field.gf import field_new, field_from_order
from planeforge.geometry.plane import build_plane, plane_dump
from planeforge.geometry.affine import affine_frame
from planeforge.blocking.properties import check_properties, tangent_report
from planeforge.blocking import constructions
from planeforge.blocking.alpha import alpha, alpha_inverse
from planeforge.search.query import SearchQuery, MODES
from planeforge.search.enumerator import (enumerate_sets, verify_affine_bound,
                                          spectrum_report)
from planeforge.utils.formats import (dump_json, point_set_to_dict,
                                      load_point_set, spectrum_to_dict,
                                      spectrum_to_text)
from planeforge.verify import verify_paper

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ("vertexless-triangle", "k-construction", "affine-3q4",
                 "affine-3q6", "baer-subplane", "baer-patch", "semioval-3q4")


class ExitCodeError(click.ClickException):
    """Library error reported with its own exit code."""

    def __init__(self, message, exit_code):
        super().__init__(message)
        self.exit_code = exit_code


class PlaneForgeGroup(click.Group):
    """Group that maps planeforge exceptions onto exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except UsageError as err:
            raise click.UsageError(str(err), ctx) from err
        except (DomainError, FieldValidationError) as err:
            raise ExitCodeError(str(err), 3) from err
        except BudgetExceededError as err:
            raise ExitCodeError(str(err), 4) from err
        except VerificationError as err:
            raise ExitCodeError(str(err), 1) from err


class SizeRange(click.ParamType):
    """A size ``k`` or an inclusive range ``A..B``."""

    name = "size"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        lo, sep, hi = str(value).partition("..")
        try:
            sizes = (int(lo), int(hi)) if sep else (int(lo), int(lo))
        except ValueError:
            self.fail(f"{value!r} is neither k nor A..B", param, ctx)
        return sizes


def _names(value):
    return tuple(name.strip() for name in value.split(",") if name.strip())


def field_options(command):
    """--q, or --p with --e, select the field."""
    command = click.option("--e", type=int, default=None,
                           help="Extension degree (with --p).")(command)
    command = click.option("--p", type=int, default=None,
                           help="Characteristic.")(command)
    command = click.option("--q", type=int, default=None,
                           help="Field order, a prime power.")(command)
    return command


def _plane(q, p, e):
    if q is not None and p is not None:
        raise click.UsageError("give either --q or --p/--e, not both")
    if q is not None:
        field = field_from_order(q)
    elif p is not None:
        field = field_new(p, 1 if e is None else e)
    else:
        raise click.UsageError("the field needs --q or --p/--e")
    return build_plane(field)


def search_options(command):
    command = click.option("--jobs", type=int, default=1, show_default=True,
                           help="Worker processes.")(command)
    command = click.option("--budget", type=int, default=None,
                           envvar=BUDGET_ENV_VAR,
                           help="Node budget.")(command)
    return command


def out_option(command):
    return click.option("--out", type=click.File("w"), default="-",
                        help="Output file (default stdout).")(command)


@click.group(cls=PlaneForgeGroup)
@click.option("-v", "--verbose", count=True,
              help="-v for progress messages, -vv for debugging.")
def cli(verbose):
    """Blocking sets in the finite planes PG(2,q) and AG(2,q)."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@field_options
@click.option("--dump", is_flag=True, help="Text dump of the incidences.")
@out_option
def plane(q, p, e, dump, out):
    """Build PG(2,q) and describe it."""
    structure = _plane(q, p, e)
    if dump:
        out.write(plane_dump(structure))
        return
    field = structure.field
    out.write(dump_json({"q": field.q, "p": field.p, "e": field.e,
                         "modulus": list(field.modulus),
                         "modulus_str": field.modulus_str(),
                         "points": structure.num_points,
                         "lines": structure.num_lines}))


@cli.command()
@click.argument("kind", type=click.Choice(CONSTRUCTIONS))
@field_options
@click.option("--n", type=int, default=2, show_default=True,
              help="Number of points D_i (k-construction).")
@click.option("--seed", type=int, default=None,
              help="Permute the choices (default: smallest ids).")
@click.option("--r-inf", "r_inf", type=int, default=0, show_default=True,
              help="Line at infinity of the affine constructions.")
@out_option
def construct(kind, q, p, e, n, seed, r_inf, out):
    """Build a blocking set and print it as a point set file."""
    structure = _plane(q, p, e)
    frame = None
    if kind == "vertexless-triangle":
        triangle = constructions.pick_triangle(structure, seed)
        S, trace = constructions.vertexless_triangle(structure, *triangle)
    elif kind == "k-construction":
        S, trace = constructions.k_construction(structure, n, seed=seed)
    elif kind in ("affine-3q4", "affine-3q6"):
        frame = affine_frame(structure, r_inf)
        build = constructions.affine_3q4 if kind == "affine-3q4" else \
            constructions.affine_3q6
        S, trace = build(frame)
    elif kind == "baer-subplane":
        S, trace = constructions.baer_subplane(structure), None
    elif kind == "baer-patch":
        S, T, tangent = constructions.baer_patch_q4(structure)
        trace = {"T": T, "tangent": tangent}
    else:
        S, trace = constructions.semioval_3q4(structure)
    logger.info("Built %s with %d points", kind, S.size)
    out.write(dump_json(point_set_to_dict(S, frame, trace)))


@cli.command()
@click.option("--set", "set_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Point set file.")
@click.option("--props", default="blocking,minimal,semioval",
              show_default=True,
              help="Comma separated: blocking, minimal, semioval, r_inf, "
                   "pi, pi_strong.")
@click.option("--point", type=int, default=None,
              help="Point for the r_inf property.")
@click.option("--direction", type=int, default=None,
              help="Point of r_inf for the pi properties.")
@click.option("--report", is_flag=True,
              help="Add the tangent spectrum of the set.")
@out_option
def check(set_file, props, point, direction, report, out):
    """Evaluate properties of a point set file."""
    S, frame = load_point_set(set_file)
    structure = S.plane if frame is None else frame
    result = {"size": S.size,
              "setting": "projective" if frame is None else "affine",
              "properties": check_properties(structure, S, _names(props),
                                             point=point,
                                             direction=direction)}
    if report:
        result["report"] = tangent_report(structure, S).to_dict()
    out.write(dump_json(result))


@cli.command("alpha")
@click.option("--set", "set_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Point set file.")
@click.option("--point", type=int, default=None,
              help="Point P of a projective set (forward map).")
@click.option("--direction", type=int, default=None,
              help="Point of r_inf for an affine set (inverse map).")
@out_option
def alpha_command(set_file, point, direction, out):
    """Map between projective and affine minimal blocking sets."""
    S, frame = load_point_set(set_file)
    if (point is None) == (direction is None):
        raise click.UsageError("give exactly one of --point or --direction")
    if point is not None:
        if frame is not None:
            raise click.UsageError("--point maps a projective set")
        image_frame, image = alpha(S.plane, S, point)
        out.write(dump_json(point_set_to_dict(image, image_frame)))
    else:
        if frame is None:
            raise click.UsageError("--direction maps an affine set")
        out.write(dump_json(point_set_to_dict(alpha_inverse(frame, S,
                                                            direction))))


@cli.command()
@field_options
@click.option("--size", "sizes", type=SizeRange(), required=True,
              help="Size k or range A..B.")
@click.option("--filters", default="blocking,minimal", show_default=True,
              help="Comma separated filters.")
@click.option("--mode", type=click.Choice(MODES), default="pruned",
              show_default=True)
@click.option("--r-inf", "r_inf", type=int, default=None,
              help="Search AG(2,q) with this line at infinity.")
@click.option("--point", type=int, default=None,
              help="Point for the r_inf_at filter.")
@click.option("--direction", type=int, default=None,
              help="Point of r_inf for the pi filters.")
@click.option("--limit", type=int, default=None,
              help="Stop after this many matches.")
@click.option("--timing", is_flag=True,
              help="Include elapsed time and node count.")
@click.option("--progress", is_flag=True, help="Show a progress bar.")
@search_options
@out_option
def search(q, p, e, sizes, filters, mode, r_inf, point, direction, limit,
           timing, progress, budget, jobs, out):
    """Enumerate point sets and print the certificate."""
    structure = _plane(q, p, e)
    setting = "projective"
    if r_inf is not None:
        structure = affine_frame(structure, r_inf)
        setting = "affine"
    query = SearchQuery(sizes, _names(filters), setting=setting,
                        r_inf=r_inf, point=point, direction=direction,
                        mode=mode, limit=limit)
    certificate = enumerate_sets(structure, query, budget=budget, jobs=jobs,
                                 progress=progress)
    out.write(dump_json(certificate.to_dict(timing=timing)))


@cli.command()
@field_options
@click.option("--size", "sizes", type=SizeRange(), required=True,
              help="Size k or range A..B.")
@click.option("--mode", type=click.Choice(MODES), default=None,
              help="Default: exhaustive for q <= 4, pruned above.")
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
@search_options
@out_option
def spectrum(q, p, e, sizes, mode, as_json, budget, jobs, out):
    """Labeled counts of minimal blocking sets per size."""
    report = spectrum_report(_plane(q, p, e), sizes, mode=mode,
                             budget=budget, jobs=jobs)
    if as_json:
        out.write(dump_json(spectrum_to_dict(report)))
    else:
        out.write(spectrum_to_text(report))


@cli.command("affine-bound")
@field_options
@click.option("--r-inf", "r_inf", type=int, default=0, show_default=True)
@search_options
@out_option
def affine_bound(q, p, e, r_inf, budget, jobs, out):
    """Certify that AG(2,q) has no blocking set below 2q-1 points."""
    frame = affine_frame(_plane(q, p, e), r_inf)
    certificate = verify_affine_bound(frame, budget=budget, jobs=jobs)
    out.write(dump_json(certificate.to_dict()))


@cli.command("verify-paper")
@click.option("--q", type=int, required=True, help="Order of the plane.")
@click.option("--timing", is_flag=True, help="Include per check times.")
@search_options
@out_option
def verify_paper_command(q, timing, budget, jobs, out):
    """Run the acceptance checks for one order; exit 1 on a failure."""
    report = verify_paper(q, budget=budget, jobs=jobs)
    out.write(dump_json(report.to_dict(timing=timing)))
    if not report.passed:
        raise ExitCodeError(f"failed checks: {', '.join(report.failures)}",
                            1)


def main():
    cli(prog_name="planeforge")

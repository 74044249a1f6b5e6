# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Tests of the command line
-------------------------
"""
import json

from numpy.testing import assert_equal

import pytest
from click.testing import CliRunner

from planeforge.cli import cli
from planeforge.field.gf import field_from_order
from planeforge.geometry.plane import build_plane
from planeforge.blocking.properties import check_properties
from planeforge.utils.formats import load_point_set

pg5 = build_plane(field_from_order(5))


@pytest.fixture
def runner():
    return CliRunner()


def construct(runner, path, *args):
    result = runner.invoke(cli, ["construct", *args, "--out", str(path)])
    assert_equal(result.exit_code, 0)
    return json.loads(path.read_text())


def test_help(runner):
    result = runner.invoke(cli, ["--help"])
    assert_equal(result.exit_code, 0)
    assert "Commands" in result.output
    for command in ("plane", "construct", "check", "alpha", "search",
                    "spectrum", "affine-bound", "verify-paper"):
        assert command in result.output


def test_plane(runner):
    result = runner.invoke(cli, ["plane", "--q", "4"])
    assert_equal(result.exit_code, 0)
    summary = json.loads(result.output)
    assert_equal(summary["points"], 21)
    assert_equal(summary["modulus_str"], "x^2 + x + 1")
    result = runner.invoke(cli, ["plane", "--p", "3", "--e", "1", "--dump"])
    assert_equal(result.exit_code, 0)
    assert result.output.startswith("point 0 0 0 1\n")


def test_construct_and_check(runner, tmp_path):
    path = tmp_path / "t.json"
    document = construct(runner, path, "vertexless-triangle", "--q", "5")
    assert_equal(len(document["points"]), 12)
    result = runner.invoke(cli, ["check", "--set", str(path), "--props",
                                 "blocking,minimal,semioval"])
    assert_equal(result.exit_code, 0)
    checked = json.loads(result.output)
    assert_equal(checked["properties"],
                 {"blocking": True, "minimal": True, "semioval": True})
    # same answers as in process
    S, _ = load_point_set(path)
    assert_equal(checked["properties"],
                 check_properties(pg5, S, ["blocking", "minimal",
                                           "semioval"]))


def test_output_is_deterministic(runner):
    args = ["construct", "k-construction", "--q", "7", "--n", "3"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert_equal(first.exit_code, 0)
    assert_equal(first.output, second.output)
    assert_equal(json.loads(first.output)["trace"]["n"], 3)


def test_check_report(runner, tmp_path):
    path = tmp_path / "k.json"
    construct(runner, path, "k-construction", "--q", "5", "--n", "2")
    result = runner.invoke(cli, ["check", "--set", str(path), "--props",
                                 "blocking,semioval", "--report"])
    checked = json.loads(result.output)
    assert_equal(checked["properties"]["semioval"], False)
    assert_equal(sum(checked["report"]["spectrum"]), 31)


def test_alpha_commands(runner, tmp_path):
    affine = tmp_path / "affine.json"
    document = construct(runner, affine, "affine-3q4", "--q", "5")
    direction = document["trace"]["P_dir"]
    result = runner.invoke(cli, ["check", "--set", str(affine), "--props",
                                 "r_inf"])
    assert_equal(result.exit_code, 2)
    result = runner.invoke(cli, ["alpha", "--set", str(affine),
                                 "--direction", str(direction)])
    assert_equal(result.exit_code, 0)
    lifted = json.loads(result.output)
    assert_equal(len(lifted["points"]), 12)
    assert "setting" not in lifted

    projective = tmp_path / "lifted.json"
    projective.write_text(result.output)
    result = runner.invoke(cli, ["alpha", "--set", str(projective),
                                 "--point", str(direction)])
    assert_equal(result.exit_code, 0)
    image = json.loads(result.output)
    assert_equal(sorted(image["points"]), sorted(document["points"]))
    assert_equal(image["setting"], document["setting"])


def test_alpha_errors(runner, tmp_path):
    path = tmp_path / "k.json"
    construct(runner, path, "k-construction", "--q", "5", "--n", "3")
    S, _ = load_point_set(path)
    result = runner.invoke(cli, ["alpha", "--set", str(path), "--point",
                                 str(S.ids()[0])])
    assert_equal(result.exit_code, 3)
    assert "r_inf-property" in result.output
    result = runner.invoke(cli, ["alpha", "--set", str(path), "--point", "0",
                                 "--direction", "1"])
    assert_equal(result.exit_code, 2)


def test_search(runner):
    result = runner.invoke(cli, ["search", "--q", "3", "--size", "1..13",
                                 "--mode", "exhaustive"])
    assert_equal(result.exit_code, 0)
    certificate = json.loads(result.output)
    assert certificate["complete"]
    assert_equal(certificate["counts"]["6"], 234)
    assert "elapsed_ms" not in certificate
    parallel = runner.invoke(cli, ["search", "--q", "3", "--size", "1..13",
                                   "--jobs", "2"])
    serial = runner.invoke(cli, ["search", "--q", "3", "--size", "1..13"])
    assert_equal(parallel.output, serial.output)
    assert_equal(json.loads(serial.output)["matches"],
                 certificate["matches"])


def test_search_semiovals(runner):
    result = runner.invoke(cli, ["search", "--q", "4", "--size", "7..9",
                                 "--filters", "blocking,minimal,semioval"])
    assert_equal(result.exit_code, 0)
    certificate = json.loads(result.output)
    assert certificate["complete"]
    assert certificate["counts"]["9"] > 0


def test_search_affine(runner):
    result = runner.invoke(cli, ["search", "--q", "3", "--size", "5",
                                 "--filters", "blocking", "--r-inf", "0",
                                 "--timing"])
    assert_equal(result.exit_code, 0)
    certificate = json.loads(result.output)
    assert certificate["counts"]["5"] > 0
    assert "nodes" in certificate
    assert_equal(certificate["query"]["r_inf"], 0)


def test_exit_codes(runner):
    # usage
    assert_equal(runner.invoke(cli, ["search", "--q", "3",
                                     "--size", "14"]).exit_code, 2)
    assert_equal(runner.invoke(cli, ["search", "--q", "3",
                                     "--size", "many"]).exit_code, 2)
    assert_equal(runner.invoke(cli, ["plane"]).exit_code, 2)
    assert_equal(runner.invoke(cli, ["search", "--q", "3", "--size", "6",
                                     "--filters", "blocking,pi",
                                     "--direction", "1"]).exit_code, 2)
    # domain and field errors
    assert_equal(runner.invoke(cli, ["plane", "--q", "6"]).exit_code, 3)
    assert_equal(runner.invoke(cli, ["construct", "k-construction",
                                     "--q", "3"]).exit_code, 3)
    assert_equal(runner.invoke(cli, ["construct", "baer-subplane",
                                     "--q", "5"]).exit_code, 3)
    assert_equal(runner.invoke(cli, ["affine-bound", "--q", "2"]).exit_code,
                 3)
    # budget
    args = ["search", "--q", "4", "--size", "1..21", "--mode", "exhaustive"]
    assert_equal(runner.invoke(cli, args + ["--budget", "100"]).exit_code, 4)
    assert_equal(runner.invoke(cli, args,
                               env={"PLANEFORGE_BUDGET": "100"}).exit_code, 4)


def test_spectrum(runner):
    result = runner.invoke(cli, ["spectrum", "--q", "3", "--size", "5..7",
                                 "--json"])
    assert_equal(result.exit_code, 0)
    rows = json.loads(result.output)["rows"]
    assert_equal([row["minimal"] for row in rows], [0, 234, 0])
    text = runner.invoke(cli, ["spectrum", "--q", "3", "--size", "6"])
    assert "234" in text.output


def test_affine_bound(runner):
    result = runner.invoke(cli, ["affine-bound", "--q", "3"])
    assert_equal(result.exit_code, 0)
    certificate = json.loads(result.output)
    assert certificate["complete"]
    assert_equal(certificate["matches"], [])


def test_verify_paper(runner):
    result = runner.invoke(cli, ["verify-paper", "--q", "3"])
    assert_equal(result.exit_code, 0)
    report = json.loads(result.output)
    assert report["passed"]
    assert_equal(report["q"], 3)

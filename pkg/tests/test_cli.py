from __future__ import annotations

import json
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec import Hypergraph, ParseError, fig3, format_hypergraph, parse_hypergraph


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "hyperspec", *args], input=stdin, capture_output=True, text=True, timeout=120
    )


@pytest.fixture
def fig3_file(tmp_path):
    path = tmp_path / "fig3.hg"
    path.write_text(format_hypergraph(fig3()))
    return path


def test_gen_pipe_spectrum():
    gen = run("gen", "complete", "--n", "4", "--k", "3")
    assert gen.returncode == 0
    out = run("spectrum", "-", stdin=gen.stdout)
    assert out.returncode == 0
    assert out.stdout.splitlines() == ["6 (x1)", "-2 (x3)"]


def test_verify_nns_energy_json():
    out = run("verify", "nns-energy", "--gen", "fig3", "--json")
    assert out.returncode == 0
    d = json.loads(out.stdout)
    assert d["verdict"] == "match"
    assert d["oracle_value"] == pytest.approx(76.2998, abs=1e-3)


def test_construct_ns_pipe_invariants(fig3_file):
    built = run("construct", "ns", "--m", "2", "--input", str(fig3_file))
    assert built.returncode == 0
    assert built.stdout.startswith("18 3\n# originals 0..6\n")
    out = run("invariants", "-", "--json", stdin=built.stdout)
    assert out.returncode == 0
    assert json.loads(out.stdout)["nullity"] == 8


def test_construct_join_needs_second(fig3_file):
    out = run("construct", "vjoin", "--input", str(fig3_file))
    assert out.returncode == 1
    ok = run("construct", "sjoin", "--input", str(fig3_file), "--second", str(fig3_file))
    assert ok.returncode == 0 and ok.stdout.startswith("18 3\n")


def test_spectrum_exact(fig3_file):
    out = run("spectrum", str(fig3_file), "--exact")
    assert out.returncode == 0
    assert "det 0" in out.stdout
    assert "charpoly x^6" in out.stdout


def test_energy_json(fig3_file):
    out = run("energy", str(fig3_file), "--json")
    assert json.loads(out.stdout)["energy"] == pytest.approx(12.0, abs=1e-10)


def test_verify_mismatch_exit_code():
    out = run("verify", "ns-spectrum", "--gen", "fig3", "--tol", "-1")
    assert out.returncode == 2
    assert "mismatch" in out.stdout


def test_verify_not_applicable_exit_code():
    out = run("verify", "nns-spectrum", "--gen", "fig2a")
    assert out.returncode == 0
    assert "not-applicable" in out.stdout


def test_verify_join_with_second_generator():
    out = run("verify", "sjoin-spectrum", "--gen", "fig3", "--second_gen", "complete",
              "--second_n", "4", "--second_k", "3", "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["verdict"] == "match"


def test_search_cospectral_cli():
    out = run("search-cospectral", "--n", "3", "--k", "3", "--r", "1", "--json")
    assert out.returncode == 0
    d = json.loads(out.stdout)
    assert d["hypergraphs"] == 1 and d["pairs"] == []
    out = run("search-cospectral", "--n", "4", "--k", "3", "--r", "2")
    assert out.returncode == 1


def test_singular_family_cli(fig3_file):
    out = run("singular-family", "--base", str(fig3_file), "--m-max", "2", "--json")
    assert out.returncode == 0
    members = {m["construction"]: m for m in json.loads(out.stdout)["members"]}
    assert members["ns(base)"]["nullity"] == 2
    assert members["ns_m(base, m=2)"]["nullity"] == 8


def test_usage_errors():
    assert run().returncode == 1
    assert run("frobnicate").returncode == 1
    assert run("verify", "no-such-id", "--gen", "fig3").returncode == 1
    assert run("verify", "ns-spectrum").returncode == 1
    assert run("gen", "complete", "--n", "4").returncode == 1


def test_malformed_file_reports_line(tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("4 3\n0 1 2\n# fine\n0 1 9\n")
    out = run("spectrum", str(bad))
    assert out.returncode == 1
    assert "line 4" in out.stderr
    assert run("spectrum", str(tmp_path / "missing.hg")).returncode == 1


@pytest.mark.parametrize(
    "text,line",
    [
        ("3\n", 1),
        ("3 3\n0 1\n", 2),
        ("3 3\n0 1 1\n", 2),
        ("3 3\n0 1 2\n2 1 0\n", 3),
        ("3 3\nx y z\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(text)
    assert info.value.line == line


def test_parse_accepts_comments_and_unsorted_edges():
    h = parse_hypergraph("# header next\n4 3\n\n3 1 2\n# c\n2 1 0\n")
    assert h == Hypergraph.from_edges(4, 3, [(0, 1, 2), (1, 2, 3)])


@st.composite
def hypergraphs(draw):
    k = draw(st.integers(2, 4))
    n = draw(st.integers(k, 7))
    pool = list(combinations(range(n), k))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(len(pool), 10)))
    return Hypergraph.from_edges(n, k, edges)


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_round_trip(h):
    text = format_hypergraph(h)
    assert parse_hypergraph(text) == h
    assert format_hypergraph(parse_hypergraph(text)) == text

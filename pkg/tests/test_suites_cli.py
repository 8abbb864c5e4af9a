"""Harness: property suites, the regular-split identity, and the CLI."""
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from k4cut.cli import main
from k4cut.errors import InputError
from k4cut.generators import complete_multipartite, cycle_graph, petersen_graph, random_regular
from k4cut.graph import mask_of, parse_edge_list
from k4cut.suites import SUITE_NAMES, SuiteConfig, fixture_graphs, regular_split_check, run_suite


def run_cli(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


class TestRegularSplitCheck:
    def test_c6_alternating(self):
        c6 = cycle_graph(6)
        s = [0, 2, 4]
        assert regular_split_check(c6, s)
        assert c6.edges_inside(mask_of(s)) == 0

    def test_k222_part_plus_vertex(self, k222):
        s = [0, 1, 2]
        assert regular_split_check(k222, s)
        assert k222.edges_inside(mask_of(s)) == 2
        comp = k222.full_mask & ~mask_of(s)
        assert k222.edges_inside(comp) == 2

    def test_petersen_every_tested_half(self, petersen):
        from k4cut.generators import SplitMix64

        rng = SplitMix64(17)
        for _ in range(20):
            vertices = list(range(10))
            rng.shuffle(vertices)
            assert regular_split_check(petersen, sorted(vertices[:5]))

    def test_rejects_odd_n(self, c5):
        with pytest.raises(InputError):
            regular_split_check(c5, [0, 1])

    def test_rejects_irregular(self):
        g = parse_edge_list("p 4 3\ne 1 2\ne 1 3\ne 1 4\n")
        with pytest.raises(InputError):
            regular_split_check(g, [0, 1])

    def test_rejects_wrong_size(self, k222):
        with pytest.raises(InputError):
            regular_split_check(k222, [0, 1])

    def test_random_regular_graphs(self):
        for seed in range(10):
            n = 8 + 2 * (seed % 5)
            d = 2 + seed % (n - 2)
            if (n * d) % 2:
                d += 1
            g = random_regular(n, d, seed)
            s = list(range(n // 2))
            assert regular_split_check(g, s)


class TestSuites:
    @pytest.mark.parametrize("suite", SUITE_NAMES)
    def test_all_pass(self, suite):
        cfg = SuiteConfig(suite=suite, trials=12, seed=7, n_max=24, sweep_max_n=5)
        report = run_suite(cfg)
        assert report["passed"], report["failures"][:2]
        assert report["checks_run"] == len(report["checks"]) > 0

    def test_deterministic_reports(self):
        for suite in ("lemmas", "regular_split", "technical"):
            cfg = SuiteConfig(suite=suite, trials=10, seed=42)
            a = json.dumps(run_suite(cfg), sort_keys=True)
            b = json.dumps(run_suite(cfg), sort_keys=True)
            assert a == b

    def test_different_seeds_differ(self):
        a = run_suite(SuiteConfig(suite="lemmas", trials=10, seed=1))
        b = run_suite(SuiteConfig(suite="lemmas", trials=10, seed=2))
        names_a = [c["instance"] for c in a["checks"]]
        names_b = [c["instance"] for c in b["checks"]]
        assert names_a != names_b  # random pool depends on the seed

    def test_config_validation(self):
        with pytest.raises(InputError):
            SuiteConfig(suite="nope")
        with pytest.raises(InputError):
            SuiteConfig(suite="lemmas", trials=0)

    def test_fixtures_are_k4free(self):
        for name, g in fixture_graphs():
            assert g.is_k4_free(), name


class TestCliGenerate:
    def test_complete_multipartite(self):
        code, out, _ = run_cli(["generate", "complete_multipartite", "3", "3", "3"])
        assert code == 0
        g = parse_edge_list(out)
        assert g == complete_multipartite([3, 3, 3])

    def test_blowup(self):
        code, out, _ = run_cli(["generate", "blowup", "c5", "2"])
        assert code == 0
        assert parse_edge_list(out).e == 20

    def test_seeded_families_deterministic(self):
        a = run_cli(["generate", "random_tripartite", "10", "0.5", "--seed", "3"])[1]
        b = run_cli(["generate", "random_tripartite", "10", "0.5", "--seed", "3"])[1]
        assert a == b

    def test_petersen_base(self):
        code, out, _ = run_cli(["generate", "blowup", "petersen", "1"])
        assert code == 0 and parse_edge_list(out) == petersen_graph()

    def test_unknown_family(self):
        code, _, err = run_cli(["generate", "mystery", "1"])
        assert code == 2 and "error" in err

    def test_bad_params(self):
        code, _, err = run_cli(["generate", "random_tripartite", "ten", "0.5"])
        assert code == 2


class TestCliAnalyze:
    def test_turan9_json(self):
        turan = run_cli(["generate", "complete_multipartite", "3", "3", "3"])[1]
        code, out, _ = run_cli(["analyze", "--input", "-", "--json"], stdin_text=turan)
        assert code == 0
        rep = json.loads(out)
        assert rep["deletions"] == 9
        assert rep["t"] == {"num": 2, "den": 1}
        assert len(rep["deletion_edges"]) == 9
        assert rep["extremal_flag"] is True

    def test_human_line(self):
        turan = run_cli(["generate", "complete_multipartite", "2", "2", "2"])[1]
        code, out, _ = run_cli(["analyze", "--input", "-"], stdin_text=turan)
        assert code == 0
        assert "deletions=4" in out

    def test_k4_input_is_error(self):
        k4 = "p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
        code, _, err = run_cli(["analyze", "--input", "-"], stdin_text=k4)
        assert code == 2 and "K4" in err

    def test_missing_file(self):
        code, _, err = run_cli(["analyze", "--input", "/no/such/file"])
        assert code == 2


class TestCliOracle:
    def test_c5(self):
        c5_text = run_cli(["generate", "blowup", "c5", "1"])[1]
        code, out, _ = run_cli(["oracle", "--input", "-"], stdin_text=c5_text)
        assert code == 0
        res = json.loads(out)
        assert res["max_cut"] == 4 and res["min_deletions"] == 1

    def test_limit(self):
        big = run_cli(["generate", "complete_multipartite", "8", "8", "8"])[1]
        code, _, err = run_cli(
            ["oracle", "--input", "-", "--limit", "20"], stdin_text=big
        )
        assert code == 2


class TestCliVerify:
    def test_technical_suite(self):
        code, out, _ = run_cli(["verify", "--suite", "technical"])
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_byte_identical_reruns(self):
        args = ["verify", "--suite", "lemmas", "--trials", "15", "--seed", "42"]
        a = run_cli(args)
        b = run_cli(args)
        assert a == b and a[0] == 0

    def test_unknown_suite_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            run_cli(["verify", "--suite", "imaginary"])
        assert exc.value.code == 2

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            run_cli(["verify", "--suite", "technical", "--frobnicate"])
        assert exc.value.code == 2


class TestCliRegularity:
    def test_pipeline(self, tmp_path):
        graph_text = run_cli(["generate", "blowup", "k3", "4"])[1]
        gfile = tmp_path / "g.el"
        gfile.write_text(graph_text)
        pfile = tmp_path / "p.json"
        pfile.write_text(
            '{"classes": [[0,1,2,3],[4,5,6,7],[8,9,10,11]],'
            ' "epsilon": {"num":1,"den":10}, "delta": {"num":1,"den":2}}'
        )
        code, out, _ = run_cli(
            ["regularity", "--input", str(gfile), "--partition", str(pfile)]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["report"]["deletions"]["total"] == 16
        assert obj["certificate"]["method"] == "regularity"

    def test_bad_partition(self, tmp_path):
        gfile = tmp_path / "g.el"
        gfile.write_text("p 2 1\ne 1 2\n")
        pfile = tmp_path / "p.json"
        pfile.write_text("{}")
        code, _, err = run_cli(
            ["regularity", "--input", str(gfile), "--partition", str(pfile)]
        )
        assert code == 2

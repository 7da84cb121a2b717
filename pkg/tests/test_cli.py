import json
import subprocess
import sys
from pathlib import Path

import pytest

from scatterlab.cli import main

WORKED_F = {"kappa": 4, "f": [[1, 2, [0]]]}
WORKED_P = {"a": [0, 1], "h": [[0, [0]], [1, [0, 1]]], "i": [[0, 1, []]]}
WORKED_Q = {"a": [0, 2], "h": [[0, [0]], [2, [0, 2]]], "i": [[0, 2, []]]}
BAD_IV = {
    "a": [0, 1, 2],
    "h": [[0, [0]], [1, [0, 1]], [2, [0, 2]]],
    "i": [[0, 1, []], [0, 2, []], [1, 2, []]],
}


def write(tmp_path: Path, name: str, doc) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return str(path)


def run_main(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


class TestGenF:
    def test_writes_file_and_deterministic(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["gen-f", "--kappa", "8", "--seed", "5", "--out", str(out1)]) == 0
        assert main(["gen-f", "--kappa", "8", "--seed", "5", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_kappa_one_empty(self, tmp_path, capsys):
        code, out = run_main(["gen-f", "--kappa", "1"], capsys)
        assert code == 0
        assert json.loads(out)["f"] == []

    def test_density_one_full(self, tmp_path, capsys):
        code, out = run_main(["gen-f", "--kappa", "4", "--density", "1.0"], capsys)
        doc = json.loads(out)
        assert [2, 3, [0, 1]] in doc["f"]

    def test_kappa_cap(self, capsys):
        assert main(["gen-f", "--kappa", "65"]) == 2


class TestValidate:
    def test_valid_condition(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        c = write(tmp_path, "p.json", WORKED_P)
        code, out = run_main(["validate", "--f", f, "--cond", c], capsys)
        assert code == 0
        assert json.loads(out)["valid"] is True

    def test_invalid_condition_lists_clause(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        c = write(tmp_path, "bad.json", BAD_IV)
        code, out = run_main(["validate", "--f", f, "--cond", c], capsys)
        assert code == 1
        doc = json.loads(out)
        assert doc["valid"] is False
        assert doc["violations"][0]["clause"] == "iv"
        assert doc["violations"][0]["at"] == [1, 2]

    def test_malformed_file(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        bad = tmp_path / "broken.json"
        bad.write_text("{nope")
        assert main(["validate", "--f", f, "--cond", str(bad)]) == 2

    def test_missing_file(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        assert main(["validate", "--f", f, "--cond", str(tmp_path / "absent.json")]) == 2


class TestAmalgamate:
    def test_worked_pair(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        p = write(tmp_path, "p.json", WORKED_P)
        q = write(tmp_path, "q.json", WORKED_Q)
        out = tmp_path / "r.json"
        code, text = run_main(
            ["amalgamate", "--f", f, "--p", p, "--q", q, "--out", str(out)], capsys
        )
        assert code == 0
        doc = json.loads(text)
        assert doc["below_p"] and doc["below_q"] and doc["result_valid"]
        r = json.loads(out.read_text())
        assert r["a"] == [0, 1, 2]
        assert [1, 2, [0]] in r["i"]

    def test_p_plus_p_is_p(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        p = write(tmp_path, "p.json", WORKED_P)
        out = tmp_path / "r.json"
        code, _ = run_main(["amalgamate", "--f", f, "--p", p, "--q", p, "--out", str(out)], capsys)
        assert code == 0
        assert json.loads(out.read_text()) == WORKED_P

    def test_non_twins_fail_with_clause(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 4, "f": []})
        p = write(tmp_path, "p.json", WORKED_P)
        q = write(tmp_path, "q.json", WORKED_Q)
        code, out = run_main(["amalgamate", "--f", f, "--p", p, "--q", q], capsys)
        assert code == 1
        doc = json.loads(out)
        assert doc["good_twins"] is False
        assert any(c.startswith("3") for c in doc["failed_clauses"])


class TestTwins:
    def test_good_pair_reports_isomorphism(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", WORKED_F)
        p = write(tmp_path, "p.json", WORKED_P)
        q = write(tmp_path, "q.json", WORKED_Q)
        code, out = run_main(["twins", "--f", f, "--p", p, "--q", q], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["twins"] and doc["good_twins"]
        assert doc["isomorphism"] == [[0, 0], [1, 2]]


class TestCloseAndLowerBound:
    def test_close(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 6, "f": [[4, 5, [1, 2]]]})
        code, out = run_main(["close", "--f", f, "--base", "4", "--partners", "5"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["closure"] == [1, 2, 4]
        assert doc["iterations"] == 1

    def test_lower_bound_found(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 7, "f": [[3, 4, [0]], [4, 5, [0]]]})
        code, out = run_main(
            ["lower-bound", "--f", f, "--groups", "3|4|5", "--bound", "0", "--n", "2"], capsys
        )
        assert code == 0
        assert json.loads(out)["indices"] == [0, 1]

    def test_lower_bound_none(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 7, "f": []})
        code, out = run_main(
            ["lower-bound", "--f", f, "--groups", "3|4|5", "--bound", "0", "--n", "2"], capsys
        )
        assert code == 0
        assert json.loads(out)["indices"] is None

    def test_lower_bound_overlap_rejected(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 7, "f": []})
        assert main(["lower-bound", "--f", f, "--groups", "3,4|4", "--bound", "", "--n", "1"]) == 2


class TestSampleSpace:
    def test_point_schedule(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 5, "f": [[2, 3, [0, 1]], [3, 4, [1]]]})
        sched = write(tmp_path, "s.json", [{"point": a} for a in range(5)])
        out = tmp_path / "space.json"
        code, text = run_main(
            ["sample-space", "--f", f, "--schedule", sched, "--out", str(out)], capsys
        )
        assert code == 0
        doc = json.loads(text)
        assert doc["star_containment"] and doc["loc_comp_hypothesis"] and doc["subbase_compactness"]
        space = json.loads(out.read_text())
        assert [a for a, _ in space["H"]] == list(range(5))

    def test_empty_schedule_discrete(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 3, "f": []})
        sched = write(tmp_path, "s.json", [])
        code, text = run_main(["sample-space", "--f", f, "--schedule", sched], capsys)
        assert code == 0
        doc = json.loads(text)
        assert doc["cb_rank_histogram"] == {"0": 3}

    def test_unsatisfiable_goal(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 5, "f": []})
        sched = write(tmp_path, "s.json", [{"nbhd": {"beta": 3, "b": [], "Z": [1]}}])
        assert main(["sample-space", "--f", f, "--schedule", sched]) == 1


class TestCheckSpaceAndFuSim:
    def make_space(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 6, "f": [[3, 5, [0, 1, 2]], [4, 5, [1, 2]]]})
        sched = write(
            tmp_path,
            "s.json",
            [{"point": a} for a in (0, 3, 5)]
            + [{"nbhd": {"beta": 5, "b": [0], "Z": [1, 2]}}]
            + [{"point": a} for a in (1, 2, 4)],
        )
        out = tmp_path / "space.json"
        code, _ = run_main(
            ["sample-space", "--f", f, "--schedule", sched, "--seed", "4", "--out", str(out)],
            capsys,
        )
        assert code == 0
        return str(out)

    def test_check_space(self, tmp_path, capsys):
        space = self.make_space(tmp_path, capsys)
        code, out = run_main(["check-space", "--space", space], capsys)
        assert code == 0
        assert json.loads(out)["max_invariant_violations"] == []

    def test_fu_sim(self, tmp_path, capsys):
        space = self.make_space(tmp_path, capsys)
        code, out = run_main(
            ["fu-sim", "--space", space, "--A", "0,1,2,5", "--alpha", "5", "--blocks", "|0"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["suffix_convergence"] is True
        assert len(doc["acquired"]) >= 1


class TestProps:
    def test_star_suite_passes(self, capsys):
        code, out = run_main(["props", "--suite", "star-laws", "--seed", "1"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert all(v["fail"] == 0 for v in doc["outcome"].values())
        assert doc["witnesses"] == []

    def test_unknown_suite(self, capsys):
        assert main(["props", "--suite", "nonsense"]) == 2

    def test_star_suite_ignores_trials(self, capsys):
        _, out1 = run_main(["props", "--suite", "star-laws", "--trials", "3"], capsys)
        _, out2 = run_main(["props", "--suite", "star-laws"], capsys)
        assert json.loads(out1)["outcome"] == json.loads(out2)["outcome"]

    def test_trials_respected(self, capsys):
        code, out = run_main(
            ["props", "--suite", "twins-amalgam", "--trials", "7", "--seed", "3"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["outcome"]["result-valid"]["pass"] == 7

    def test_given_f_file(self, tmp_path, capsys):
        f = write(tmp_path, "f.json", {"kappa": 12, "f": [[4, 5, [0, 1]], [5, 8, [2]]]})
        code, out = run_main(
            ["props", "--suite", "twins-amalgam", "--trials", "5", "--f", f], capsys
        )
        assert code == 0
        assert json.loads(out)["inputs"]["f"] != "random"


@pytest.mark.slow
class TestDeterminismSubprocess:
    def run_cli(self, args, cwd):
        proc = subprocess.run(
            [sys.executable, "-m", "scatterlab.cli", *args],
            capture_output=True,
            cwd=cwd,
        )
        return proc.returncode, proc.stdout

    def test_props_jobs_deterministic(self, tmp_path):
        args = ["props", "--suite", "insertion", "--trials", "20", "--seed", "9"]
        rc1, out1 = self.run_cli(args, tmp_path)
        rc2, out2 = self.run_cli([*args, "--jobs", "3"], tmp_path)
        assert rc1 == rc2 == 0
        assert out1 == out2

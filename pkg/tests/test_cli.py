import pytest

from trideal.cli import main

SEQUENCE_LINES = [
    "n=0 lhs=rhs=ct=1 OK",
    "n=1 lhs=rhs=ct=3 OK",
    "n=2 lhs=rhs=ct=15 OK",
    "n=3 lhs=rhs=ct=93 OK",
    "n=4 lhs=rhs=ct=639 OK",
    "n=5 lhs=rhs=ct=4653 OK",
]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_small_range(self, capsys):
        code, out, err = run(capsys, "verify", "--max-n", "5")
        assert code == 0
        assert out.splitlines() == SEQUENCE_LINES
        assert err == ""

    def test_negative_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--max-n", "-1")
        assert code == 2
        assert "error:" in err

    def test_huge_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--max-n", "5000")
        assert code == 2


class TestCount:
    def test_by_s_size(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "2", "--by", "s-size")
        assert code == 0
        assert out == "0 1\n1 4\n2 10\ntotal 15\n"

    def test_by_red_distinct(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "2", "--by", "red-distinct")
        assert code == 0
        assert out == "0 1\n1 8\n2 6\ntotal 15\n"

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "2", "--format", "csv")
        assert code == 0
        assert out == "k,count\n0,1\n1,4\n2,10\n"

    def test_bfile_format(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "1", "--format", "bfile")
        assert code == 0
        assert out == "0 1\n1 2\n"

    def test_guard(self, capsys):
        code, _, err = run(capsys, "count", "--n", "9")
        assert code == 2
        assert "--allow-large" in err


class TestEnumerate:
    def test_n1_stream(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "1")
        assert code == 0
        assert out == (
            "n=1 total=3\n"
            "S={};R=[];G=[];B=[]\n"
            "S={1};R=[b1];G=[r1];B=[g1]\n"
            "S={1};R=[g1];G=[b1];B=[r1]\n"
        )

    def test_full_restriction(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--full")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n=2 total=10"
        assert all(line.startswith("S={1,2};") for line in lines[1:])

    def test_red_denoms_restriction(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--red-denoms", "1")
        assert code == 0
        assert out.splitlines()[0] == "n=2 total=4"

    def test_red_denoms_empty_set(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--red-denoms", "")
        assert code == 0
        assert out == "n=2 total=1\nS={};R=[];G=[];B=[]\n"

    def test_red_denoms_out_of_range(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "2", "--red-denoms", "5")
        assert code == 2
        assert "not within" in err

    def test_red_denoms_malformed(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "2", "--red-denoms", "1,x")
        assert code == 2
        assert "malformed" in err

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "1", "--format", "csv")
        assert code == 0
        assert out == "s,red,green,blue\n,,,\n1,b1,r1,g1\n1,g1,b1,r1\n"

    def test_guard(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "6")
        assert code == 2
        assert "--allow-large" in err


class TestAudit:
    def test_full_deck(self, capsys):
        code, out, _ = run(capsys, "audit", "--n", "2", "--which", "full-deck")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "audit full-deck n=2"
        assert lines[1] == "params=10 image=10 enumerated=10 expected=10"
        assert lines[-1] == "PASS"

    def test_red_set(self, capsys):
        code, out, _ = run(capsys, "audit", "--n", "2", "--which", "red-set")
        assert code == 0
        lines = out.splitlines()
        assert "D={} params=1 image=1 enumerated=1 roundtrips=OK" in lines
        assert "D={1} params=4 image=4 enumerated=4 roundtrips=OK" in lines
        assert "D={2} params=4 image=4 enumerated=4 roundtrips=OK" in lines
        assert "D={1,2} params=6 image=6 enumerated=6 roundtrips=OK" in lines
        assert "total=15" in lines
        assert lines[-1] == "PASS"

    def test_which_is_required(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["audit", "--n", "2"])
        assert excinfo.value.code == 2


class TestCt:
    def test_constant_term(self, capsys):
        code, out, _ = run(capsys, "ct", "--n", "2")
        assert code == 0
        assert out == "15\n"

    def test_poly_of_power_zero(self, capsys):
        code, out, _ = run(capsys, "ct", "--n", "0", "--poly")
        assert code == 0
        assert out == "1\n"

    def test_poly_of_base(self, capsys):
        code, out, _ = run(capsys, "ct", "--n", "1", "--poly")
        assert code == 0
        assert out == "x + y + x*y^-1 + 3 + x^-1*y + y^-1 + x^-1\n"

    def test_negative_n(self, capsys):
        code, _, err = run(capsys, "ct", "--n", "-3")
        assert code == 2


class TestBfile:
    def test_main_sequence(self, capsys):
        code, out, _ = run(capsys, "bfile", "--seq", "main", "--max-n", "4")
        assert code == 0
        assert out == "0 1\n1 3\n2 15\n3 93\n4 639\n"

    def test_franel_sequence(self, capsys):
        code, out, _ = run(capsys, "bfile", "--seq", "franel", "--max-n", "4")
        assert code == 0
        assert out == "0 1\n1 2\n2 10\n3 56\n4 346\n"

    def test_prefix_sum_sequence(self, capsys):
        code, out, _ = run(capsys, "bfile", "--seq", "prefix-sum", "--max-n", "3")
        assert code == 0
        assert out == "0 1\n1 3\n2 11\n3 45\n"


class TestTable:
    def test_groups_and_numbering(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n=2 total=15"
        assert lines[1].split() == ["S", "#", "avoid", "red", "avoid", "green", "avoid", "blue"]
        body = lines[2:]
        assert len(body) == 15
        # largest denomination set first, then singletons, then the empty set
        assert body[0].startswith("{1,2}")
        assert body[10].startswith("{1}")
        assert body[12].startswith("{2}")
        assert body[14].startswith("{}")
        assert body[14].split()[1] == "15"

    def test_empty_deck(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "0")
        assert code == 0
        assert out.splitlines()[0] == "n=0 total=1"


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_subcommand_required(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

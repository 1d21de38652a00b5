import pytest
from hypothesis import given

from conftest import colorings
from monopart import cli, io
from monopart.certificate import CertPiece, PartitionCertificate, format_certificate, parse_certificate, verify_certificate
from monopart.errors import FormatError
from monopart.families import builtin
from monopart.graph import BLUE, RED, ColoredCompleteGraph
from monopart.pipeline import partition

PATHS, CYCLES = builtin("paths"), builtin("cycles")


@given(colorings(max_n=12))
def test_coloring_roundtrip(g):
    assert io.parse_coloring(io.format_coloring(g)) == g


def test_coloring_format_example():
    g = ColoredCompleteGraph.from_red_edges(3, [(0, 1), (0, 2)])
    assert io.format_coloring(g) == "n 3\nRR\nB\n"


@pytest.mark.parametrize("text,line", [
    ("", 1), ("m 3\n", 1), ("n 3\nRR\n", 3), ("n 3\nRX\nB\n", 2), ("n 3\nRR\nBB\n", 3), ("n 0\n", 1),
])
def test_coloring_format_errors(text, line):
    with pytest.raises(FormatError) as err:
        io.parse_coloring(text)
    assert err.value.line == line


@given(colorings(min_n=1, max_n=9))
def test_certificate_roundtrip(g):
    cert = partition(g, PATHS, CYCLES)
    again = parse_certificate(format_certificate(cert))
    assert again == cert


def test_certificate_parse_errors():
    good = "certificate n=2 pieces=1\npiece 1 color=R family=paths n=2\nmap 1:1 2:2\n"
    assert parse_certificate(good).pieces[0].mapping == (0, 1)
    for bad, line in [
        ("certificate n=2\n", 1),
        ("certificate n=2 pieces=1\npiece 1 color=G family=paths n=2\nmap 1:1 2:2\n", 2),
        ("certificate n=2 pieces=1\npiece 1 color=R family=paths n=2\nmap 1:1 1:2\n", 3),
        ("certificate n=2 pieces=1\npiece 1 color=R family=paths n=2\nmap 1:1\n", 3),
        ("certificate n=2 pieces=1\npiece 2 color=R family=paths n=2\nmap 1:1 2:2\n", 2),
    ]:
        with pytest.raises(FormatError) as err:
            parse_certificate(bad)
        assert err.value.line == line


def host():
    return ColoredCompleteGraph.from_red_edges(6, [(0, 1), (1, 2), (3, 4)])


def test_verifier_accepts_valid():
    cert = PartitionCertificate(6, [CertPiece(RED, "paths", (0, 1, 2)), CertPiece(RED, "paths", (3, 4)),
                                    CertPiece(BLUE, "cycles", (5,))])
    assert verify_certificate(host(), PATHS, CYCLES, cert).ok


def test_verifier_disjointness_names_both_pieces():
    cert = PartitionCertificate(6, [CertPiece(RED, "paths", (0, 1, 4)), CertPiece(RED, "paths", (3, 4)),
                                    CertPiece(BLUE, "cycles", (5,)), CertPiece(BLUE, "cycles", (2,))])
    verdict = verify_certificate(host(), PATHS, CYCLES, cert)
    dis = [v for v in verdict.violations if v.kind == "disjointness"]
    assert dis and dis[0].pieces == (1, 2) and "5" in dis[0].message


def test_verifier_colour_violation():
    cert = PartitionCertificate(6, [CertPiece(RED, "paths", (0, 3, 1, 2, 4, 5))])
    verdict = verify_certificate(host(), PATHS, CYCLES, cert)
    assert "color" in verdict.kinds()


def test_verifier_coverage_bijection_family():
    cert = PartitionCertificate(6, [CertPiece(RED, "paths", (0, 0)), CertPiece(BLUE, "paths", (5,))])
    kinds = verify_certificate(host(), PATHS, CYCLES, cert).kinds()
    assert {"bijection", "family", "coverage"} <= kinds
    cert = PartitionCertificate(7, [CertPiece(RED, "paths", (0, 9))])
    assert {"header", "bijection"} <= verify_certificate(host(), PATHS, CYCLES, cert).kinds()


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_end_to_end(tmp_path, capsys):
    col, cert = str(tmp_path / "g.txt"), str(tmp_path / "c.txt")
    assert run(capsys, "gen", "--n", "40", "--p", "0.3", "--seed", "2", "--out", col)[0] == 0
    code, _, err = run(capsys, "partition", "--coloring", col, "--family1", "cycles", "--family2", "paths",
                       "--cert-out", cert, "--theoretical")
    assert code == 0 and "eta" in err and "pieces:" in err
    code, out, _ = run(capsys, "verify", "--coloring", col, "--family1", "cycles", "--family2", "paths", "--cert", cert)
    assert code == 0 and out.startswith("accept")
    # swapping the families turns the certificate invalid
    code, out, _ = run(capsys, "verify", "--coloring", col, "--family1", "paths", "--family2", "cycles", "--cert", cert)
    assert code == 1 and out.startswith("reject")
    code, _, _ = run(capsys, "partition", "--coloring", col, "--family1", "paths", "--bipartite", "--cert-out", cert)
    assert code == 0


def test_cli_oracle_and_gen_modes(tmp_path, capsys):
    col = str(tmp_path / "g.txt")
    code, _, err = run(capsys, "gen", "--n", "8", "--mode", "adversarial", "--budget", "200", "--out", col)
    assert code == 0 and "residual" in err
    code, out, _ = run(capsys, "oracle", "--coloring", col, "--family1", "cycles")
    assert code == 0 and int(out.strip()) >= 1
    code, out, _ = run(capsys, "gen", "--n", "4", "--mode", "bipartite_split")
    assert out == "n 4\nBRR\nRR\nB\n"


def test_cli_exit_codes(tmp_path, capsys):
    col = str(tmp_path / "g.txt")
    run(capsys, "gen", "--n", "200", "--p", "0.5", "--out", col)
    code, _, err = run(capsys, "oracle", "--coloring", col, "--family1", "cycles")
    assert code == 2 and "cap" in err
    (tmp_path / "bad.txt").write_text("n 3\nRQ\nB\n")
    code, _, err = run(capsys, "verify", "--coloring", str(tmp_path / "bad.txt"), "--family1", "paths",
                       "--cert", col)
    assert code == 2 and "line 2" in err
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "partition", "--coloring", col, "--family1", "stars")
    assert code == 2


def test_cli_budget_exit(tmp_path, capsys):
    col, cert = str(tmp_path / "g.txt"), str(tmp_path / "c.txt")
    # red K_{10,50} plus blue K_10 and K_50: no spanning cycle in either colour
    run(capsys, "gen", "--n", "60", "--mode", "bipartite_split", "--s", "10", "--out", col)
    code, _, err = run(capsys, "partition", "--coloring", col, "--family1", "cycles", "--budget", "1", "--cert-out", cert)
    assert code == 3 and "budget" in err
    assert (tmp_path / "c.txt.partial").exists()


def test_cli_bench(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "quick")
    rows = [ln.split("\t") for ln in out.strip().splitlines()]
    assert code == 0 and len(rows) == 4
    assert all(len(r) == 7 and r[6] == "yes" for r in rows)

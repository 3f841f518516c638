import json
import subprocess
import sys

import pytest

from geocolor.cli import main
from geocolor.dispatch import ROUTES, UnsupportedRoute, route
from geocolor.instances import dumps_instance
from geocolor.lab import GADGETS

# one k per route: its lower end, plus the open-ended routes one step further
MATRIX = sorted({(r.family.value, k) for r in ROUTES
                 for k in {r.k_min, r.k_max or r.k_min + 1}})


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def gen(tmp_path, family, n, seed, capsys):
    path = tmp_path / f"{family}-{seed}.json"
    code, _, _ = run(["gen", "--family", family, "--n", n, "--seed", seed, "--out", path], capsys)
    assert code == 0
    return path


@pytest.mark.parametrize("family,k", MATRIX)
def test_route_matrix(tmp_path, capsys, family, k):
    for seed in range(20):
        n = 3 + seed % 13
        inst = gen(tmp_path, family, n, seed, capsys)
        col = tmp_path / "col.json"
        assert run(["color", "--in", inst, "--k", k, "--out", col], capsys)[0] == 0
        assert json.loads(col.read_text())["palette"] == route(family, k).palette
        code, out, _ = run(["verify", "--in", inst, "--coloring", col, "--k", k], capsys)
        assert code == 0, (family, k, seed, out)
        assert json.loads(out)["valid"] is True


def test_gadget_end_to_end(tmp_path, capsys):
    inst = tmp_path / "g.json"
    inst.write_text(json.dumps({"family": "b-points", "points": [[0, 0], [1, 2], [2, 1]]}))
    col = tmp_path / "c.json"
    assert run(["color", "--in", inst, "--k", 2, "--out", col], capsys)[0] == 0
    assert run(["verify", "--in", inst, "--coloring", col, "--k", 2], capsys)[0] == 0


def test_monochromatic_coloring_exits_1(tmp_path, capsys):
    inst = gen(tmp_path, "h-points", 6, 1, capsys)
    col = tmp_path / "mono.json"
    col.write_text(json.dumps({"palette": 1, "colors": [0] * 6}))
    code, out, _ = run(["verify", "--in", inst, "--coloring", col, "--k", 2], capsys)
    report = json.loads(out)
    assert code == 1 and report["valid"] is False and len(report["witness"]) >= 2
    assert report["region"] is not None


def test_chromatic_twelve_points(tmp_path, capsys):
    gadget = next(g for g in GADGETS if g.filename == "bottomless_twelve_points.json")
    inst = tmp_path / "twelve.json"
    inst.write_text(dumps_instance(gadget.load()))
    code, out, _ = run(["chromatic", "--in", inst, "--k", 3, "--max-colors", 2], capsys)
    assert code == 0 and json.loads(out)["result"] == "none"


def test_cf_command(tmp_path, capsys):
    inst = gen(tmp_path, "b-points", 40, 2, capsys)
    col = tmp_path / "cf.json"
    assert run(["cf", "--in", inst, "--k", 2, "--out", col], capsys)[0] == 0
    code, out, _ = run(["verify", "--in", inst, "--coloring", col, "--k", 1, "--cf"], capsys)
    assert code == 0 and json.loads(out)["mode"] == "cf"


def test_render(tmp_path, capsys):
    for family in ("b-rects", "h-rects", "bprime-points"):
        inst = gen(tmp_path, family, 5, 0, capsys)
        code, out, _ = run(["render", "--in", inst], capsys)
        assert code == 0 and out.startswith("<svg") and out.rstrip().endswith("</svg>")


def test_exit_codes(tmp_path, capsys):
    assert run(["gen", "--family", "discs", "--n", 3], capsys)[0] == 2
    inst = gen(tmp_path, "bprime-rects", 4, 0, capsys)
    assert run(["color", "--in", inst, "--k", 2], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(["color", "--in", bad, "--k", 2], capsys)[0] == 3
    flat = tmp_path / "flat.json"
    flat.write_text(json.dumps({"family": "b-points", "points": [[0, 0], [1, 0]]}))
    code, _, err = run(["color", "--in", flat, "--k", 2], capsys)
    assert code == 4 and "equal y" in err
    assert run(["color", "--in", flat, "--k", 2, "--perturb"], capsys)[0] == 0
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"family": "discs", "points": []}))
    assert run(["color", "--in", unknown, "--k", 2], capsys)[0] == 2
    big = gen(tmp_path, "b-points", 40, 0, capsys)
    assert run(["chromatic", "--in", big, "--k", 2, "--max-colors", 3], capsys)[0] == 5


def test_gen_is_byte_identical(tmp_path, capsys):
    a = gen(tmp_path, "b-points", 5, 1, capsys).read_bytes()
    _, out, _ = run(["gen", "--family", "b-points", "--n", 5, "--seed", 1], capsys)
    assert out.encode() == a


def test_route_errors():
    with pytest.raises(UnsupportedRoute):
        route("b-points", 1)
    with pytest.raises(UnsupportedRoute):
        route("bprime-rects", 2)


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "geocolor.cli", "--help"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "chromatic" in res.stdout

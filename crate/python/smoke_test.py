"""Smoke test for the rpp_vertex_py extension module.

Build the extension first:

    cargo build --release -p rpp-vertex-py

then run `python3 python/smoke_test.py`. The script copies the compiled
library next to a temporary import path under the module's name, so no
packaging tool is needed. Set RPP_VERTEX_PY_LIB to use a different build.
"""

import importlib
import os
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    lib = os.environ.get("RPP_VERTEX_PY_LIB")
    if lib is None:
        for profile in ("release", "debug"):
            cand = ROOT / "target" / profile / "librpp_vertex_py.so"
            if cand.exists():
                lib = str(cand)
                break
    if lib is None:
        sys.exit("extension not built: run `cargo build --release -p rpp-vertex-py`")
    tmp = tempfile.mkdtemp()
    shutil.copy(lib, os.path.join(tmp, "rpp_vertex_py.so"))
    sys.path.insert(0, tmp)
    return importlib.import_module("rpp_vertex_py")


def main():
    rv = load()

    assert rv.hook_table([4, 3, 1]) == [[6, 4, 3, 1], [4, 2, 1], [1]]
    assert rv.maya_ascii([4, 3, 2, 2, 1], 7) == "●●○●○●●|○●○●○○○"

    series = rv.hook_product([3, 1], 8)
    assert [series.get((n, 0), 0) for n in range(9)] == rv.count_rpps([3, 1], 8)

    shape = [2, 2]
    tally = {}
    for p in rv.enumerate_pairs(shape, 4):
        g = p.g_lozenges()
        assert g == p.g_vertex()
        tally[(p.volume, g)] = tally.get((p.volume, g), 0) + 1
    assert tally == rv.pair_hook_product(shape, 4)

    for r in rv.enumerate([3, 1], 5):
        pair = r.unslide()
        assert pair.g_lozenges() == 0
        assert pair.slide() == r
        assert rv.Pair.from_json(pair.to_json()) == pair

    code, out, _ = rv.run_cli(["--format", "json", "genfun", "--shape", "[2,1]", "--max-volume", "5"])
    assert code == 0 and '"status":"pass"' in out.replace(" ", ""), out

    try:
        rv.Pair.from_json('{"shape":[1],"blue":{"shape":[1],"rows":[[1]]},"red":{"shape":[1],"rows":[[0]]}}').slide()
    except ValueError as e:
        assert "t = 0" in str(e)
    else:
        raise AssertionError("interacting pair slid")

    print("smoke test passed")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds the extension with cargo, stages it as an importable module, and
checks a handful of known values end to end.
"""

import json
import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "treebound-py"],
        cwd=REPO,
        check=True,
    )
    lib = REPO / "target" / "debug" / "libtreebound_py.so"
    if not lib.exists():  # e.g. macOS
        lib = REPO / "target" / "debug" / "libtreebound_py.dylib"
    stage = Path(tempfile.mkdtemp(prefix="treebound-py-"))
    target = stage / "treebound_py.so"
    shutil.copyfile(lib, target)
    return stage


def main() -> None:
    sys.path.insert(0, str(build_extension()))
    import treebound_py as tb

    # Sequence validation and the run-length shorthand.
    assert tb.validate("1^7,2,2,2,7") == ("1^7,2^3,7", 11, 7)
    assert tb.family_ab(3, 4) == "1^7,2^3,7"
    assert tb.family_starlike(5, 2) == "1^5,2^2,5"
    assert len(tb.enumerate_sequences(7)) == 7

    # Greedy tree of the path: both radii are N - 1.
    path = tb.Tree.bfs("1,1,2,2")
    assert path.order() == 4
    assert path.wiener() == 10
    assert path.terminal_wiener() == 3
    assert abs(path.tdsr() - 3.0) < 1e-9
    assert abs(path.dsr() - (2 + math.sqrt(10))) < 1e-9

    # Two-level family: numeric radius matches the closed form.
    t = tb.Tree.bfs(tb.family_ab(3, 4))
    closed = 7 + math.sqrt(109)
    assert abs(tb.tdsr_ab_closed(3, 4) - closed) < 1e-12
    assert abs(t.tdsr() - closed) < 1e-8
    assert abs(tb.tlb_ab_closed(3, 4) - 120 / 7) < 1e-12
    assert tb.terr_ab(3, 4) < tb.terr_limit() < 0.0295

    # Bounds report round-trips through JSON.
    report = json.loads(tb.bounds("1^7,2,2,2,7"))
    assert report["order"] == 11 and report["leaves"] == 7
    assert abs(report["tlb"] - 120 / 7) < 1e-9
    assert abs(report["tub"] - closed) < 1e-8
    assert 0 < report["terr"] < 0.03

    # Huffman construction: unit weights reproduce the greedy tree.
    h, root = tb.Tree.huffman("1^5,2,2,5", [1.0] * 5)
    assert h.canonical_form() == tb.Tree.bfs("1^5,2,2,5").canonical_form()
    assert root in range(h.order())
    assert h.tvwwi([1.0] * 5) == tb.Tree.bfs("1^5,2,2,5").terminal_wiener()

    # Arbitrary trees from edge lists.
    star = tb.Tree.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert star.degree_sequence() == "1^3,3"
    assert abs(star.tdsr() - 4.0) < 1e-9
    assert star.vwwi([0.0, 1.0, 1.0, 1.0]) == 6.0

    # Scans and probes are deterministic.
    csv = tb.scan_csv("terr", 8)
    assert csv == tb.scan_csv("terr", 8)
    assert csv.splitlines()[0] == "N,seq,metric,value,is_ab_family,is_starlike"

    verify = json.loads(tb.verify("1,1,1,2,2,3"))
    assert verify["trees_enumerated"] == 2
    assert verify["conjecture1_holds"] and verify["conjecture2_holds"]

    for name in ("lemma1", "theorem2", "perturbation"):
        first = json.loads(tb.probe(name, "1^5,2,2,5", samples=40, seed=7))
        second = json.loads(tb.probe(name, "1^5,2,2,5", samples=40, seed=7))
        assert first == second
        assert first["violations"] == 0, (name, first)

    # Errors surface as ValueError.
    try:
        tb.validate("1,2,2")
    except ValueError as e:
        assert "does not generate a tree" in str(e)
    else:
        raise AssertionError("invalid sequence accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()

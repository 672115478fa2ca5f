"""Smoke test for the logarr_py extension.

Build and install first:
    pip install maturin
    maturin build --release -m crates/py/Cargo.toml
    pip install target/wheels/logarr_py-*.whl
"""

import json
import sys

import logarr_py as la


def main() -> int:
    plane = la.Arrangement([[1, 0], [0, 1]], [2, 1])
    assert plane.dim == 2 and len(plane) == 2
    assert plane.char_poly_string() == "(t-1)^2"
    assert plane.is_free()
    assert sorted(plane.exponents()) == [1, 2]

    g3 = la.Arrangement.named("G3")
    assert g3.char_poly() == [2, -3, 1]
    assert g3.exponents() == [1, 2]
    assert g3.euler_multiplicity(1) == [1]

    ex10 = la.Arrangement.named("EX10")
    assert ex10.exponents() == [1, 3, 3, 3]
    spog = ex10.spog(1)
    assert spog["violations"] == []
    assert spog["derivations"]["classification"]["verdict"] == "SPOG"

    report = ex10.run("loci", hyperplane=10)
    assert report["violations"] == [], report["violations"]

    again = la.Arrangement.from_json(ex10.to_json())
    assert again.multiplicities == ex10.multiplicities

    try:
        la.Arrangement([[1, 0], [2, 0]])
    except ValueError as e:
        print("rejected parallel input:", e)
    else:
        raise AssertionError("parallel hyperplanes accepted")

    table = la.example5()
    mismatched = [r["hyperplane"] for r in table["rows"] if r["nd"] != r["expected_nd"]]
    print("example5 ND mismatches at rows", mismatched)
    print(json.dumps({"free": table["free"], "exponents": table["exponents"]}))
    print("smoke test ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())

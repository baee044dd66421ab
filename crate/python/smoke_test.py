"""Smoke test for the pyscrollext extension module.

Build and install first:
    maturin build --release -m crates/py/Cargo.toml -o target/wheels
    pip install target/wheels/pyscrollext-*.whl
"""

import pyscrollext as sx


def main():
    g = sx.fixture("greduit")
    assert g.names == ["a", "b", "c", "d", "x", "y", "z"]
    assert g.matrices() == ["[a, x, b] [y, c] [z, d]"]
    assert len(g.generators()) == 6
    h = g.hilbert()
    assert (h["dimension"], h["codimension"], h["degree"]) == (4, 3, 4), h
    assert g.decomposition_holds()
    assert g.oracle_diffs() == []

    c = sx.ExtensionComplex(
        [["a", "b", "c"], ["b", "c", "d"]],
        [
            (0, "a", [("b", ["x"]), ("c", ["y"])]),
            (1, "d", [("b", ["u"]), ("c", ["v"])]),
        ],
    )
    classes = {frozenset(k) for k in c.coloration()}
    assert classes == {frozenset("acd"), frozenset("b"), frozenset("yv")}, classes
    for field in (32003, "rational"):
        r = c.reduce(field=field)
        assert r["reduction_number"] == 1, r
        assert r["binomial"] and r["good"]
    assert c.decomposition_holds(field="rational")

    plain = sx.ExtensionComplex([["a", "b"], ["b", "c"]])
    assert plain.generators() == ["a*c"]

    assert sx.is_generalized_d_tree([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("b", "d")], 2)
    assert not sx.is_generalized_d_tree([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], 1)

    try:
        sx.ExtensionComplex([["a", "b"]], [(3, "a", [("b", ["x"])])])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range facet accepted")

    print("smoke test passed:", g, c)


if __name__ == "__main__":
    main()

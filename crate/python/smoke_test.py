"""Smoke test for the `ngon` extension module.

Build and install first:
    pip install maturin
    cd crates/python && maturin build --release && pip install ../../target/wheels/ngon-*.whl
"""

from ngon import Graph


def main():
    for n in range(3, 7):
        for r in range(1, 13):
            p = Graph.witness("path", n=n, length=r)
            assert p.delta("path") == (n - 1) + r

    g = Graph.witness("gamma", n=4)
    assert g.delta("gamma") == 8
    assert g.is_strong("gamma_2") == (True, None)
    assert Graph.parse(g.to_text()).to_text() == g.to_text()

    cl = Graph.witness("cl", n=3, windings=2)
    assert cl.delta("C") == 8

    member, _ = Graph.witness("cycle", n=3, length=8).kmu()
    assert member
    member, lines = Graph.witness("cycle", n=3, length=4).kmu()
    assert not member and lines[0].startswith("VIOLATION short_cycle")

    member, lines = Graph.witness("double_path", n=4).kmu()
    assert not member
    assert any("short_cycle" in l for l in lines) and any("mu_exceeded" in l for l in lines)

    seed = Graph.witness("cycle", n=3, length=8)
    grown, log = seed.grow(5, 7)
    again, log2 = seed.grow(5, 7)
    assert grown.to_text() == again.to_text() and log == log2
    assert grown.kmu()[0]

    fano = Graph.witness("fano")
    assert fano.is_ngon(thick=True)
    assert fano.automorphism_order(type_preserving=True) == 168
    assert fano.automorphism_order() == 336
    assert fano.is_strongly_transitive() and fano.is_moufang()
    assert fano.transitivity_degree(0) == 3
    assert Graph.witness("gq22").automorphism_order() == 1440

    try:
        g.delta("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown subset accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()

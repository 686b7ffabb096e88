"""Smoke test for the Python bindings. Run after `pip install ./crates/python`."""

import json

import ttknot_py as tt


def main():
    assert tt.coeff_quadruple(11, 6) == (9, 2, 5, 1)
    assert tt.trace_arc_slots(3, 4) == ([2, 0], [1])

    b = tt.torus_braid(2, 3)
    assert b.strands == 2 and b.letters == [1, 1, 1]
    assert str(b.alexander()) == "1 - t + t^2"
    assert b.alexander() == tt.torus_alexander(2, 3)

    fig8 = tt.Braid.from_text("strands: 3\n1 -2 1 -2\n")
    assert fig8.is_knot()
    assert fig8.alexander().coeffs == [1, -3, 1]

    assert tt.family_params(1, 2, 2, 2, 3) == (20, 11, 15, -1)
    par = tt.parallelize_family(1, 2, 2, 2, 1)
    assert par.strands == 16 and par.component_count() == 1

    report = json.loads(tt.verify_family(1, 2, 2, 2, 1))
    assert report["alexander_match"] and report["verdict"] == "pass"

    assert tt.cable_detect(20, 11, 15, -1) is None
    cable = json.loads(tt.cable_detect(7, 3, 6, 1))
    assert cable["cable"] == {"p": 3, "q": 19}

    tangle = json.loads(tt.tangle_report(5, 7, 2))
    assert tangle["verdict"] == "essential"

    try:
        tt.coeff_quadruple(6, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("non-coprime input accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()

"""Smoke test for the Python bindings. Run after `pip install -e crates/py`."""

import penrose

POLES = "zeta1^-1*zeta2^-1*zeta3^-1"


def main():
    assert str(penrose.transform(POLES)) == "(1; 0; 0; 0)"

    f = penrose.Section(f"z11^2*{POLES}")
    p = f.transform()
    assert p.components() == ["x2_11^2", "0", "0", "0"]
    assert p.is_monogenic()
    assert f.weight() == (["9/2", "5/2"], [4, 3, 1, 1])
    assert f.is_highest_weight()

    assert penrose.Section(f"z31^2*zeta1^-1*zeta2^-1*zeta3^-3").class_is_zero()
    assert not penrose.Section("z0").act("E12").is_zero()

    assert penrose.calibrate() == (1, "1")
    assert sorted(penrose.decompose(2)) == [((0, 0, 1), 4), ((0, 2, 0), 180), ((1, 0, 0), 36)]
    assert penrose.kernel_dim(2) == 220
    assert penrose.multiplicity_free(6)

    h = penrose.hwv(0, 0, 1)
    assert h.is_highest_weight()
    assert h.transform().is_monogenic()

    try:
        penrose.Section("zeta1^-1 + q")
    except ValueError as e:
        assert "unknown identifier q" in str(e)
    else:
        raise AssertionError("bad identifier accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()

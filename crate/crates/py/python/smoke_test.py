"""Smoke test for the qgollnitz extension module.

Build and install first, e.g. `maturin develop --release` (or build a wheel
with `maturin build --release` and pip-install it), then run this file.
"""

import json

import qgollnitz as qg


def main():
    p = qg.LaurentPoly("1 - q + 2*q^3")
    assert p.coeff(3) == 2 and p.coeff(1) == -1
    assert str(p) == "1 - q + 2*q^3"
    assert qg.LaurentPoly({0: 1, 3: 2, 1: -1}) == p
    assert p * qg.LaurentPoly("1") == p
    assert (p - p).is_zero()
    assert p.min_exp == 0 and p.max_exp == 3

    big = qg.LaurentPoly({0: 10**40})
    assert (big * big).coeff(0) == 10**80

    assert str(qg.qbinom(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
    assert qg.qbinom(4, 2).eval_at_one() == 6
    assert qg.qmultinom(3, [1, 1]).eval_at_one() == 6

    for i, j, k, L, M in [(1, 1, 1, 3, 3), (2, 1, 0, 4, 6), (-1, 2, 1, 3, 2)]:
        assert qg.check_key(i, j, k, L, M)
        assert qg.lhs_g(i, j, k, L, M) == qg.rhs_p(i, j, k, L, M)

    lhs, rhs = qg.key_limit_sides(1, 1, 1, 20)
    assert lhs == rhs and len(lhs) == 20
    lhs, rhs = qg.four_param(1, 0, 0, 0, 8)
    assert lhs == rhs == [0, 1, 1, 1, 1, 1, 1, 1]

    assert qg.check_theorem1(2, 1, 1, 1)
    assert qg.is_type1([(2, "BC"), (1, "A")])
    assert not qg.is_type1([(2, "AB"), (1, "C")])
    assert qg.staircase_forward([(3, "B"), (1, "A")])["A"] == [0]
    assert qg.remark3_transform([(1, "A")]) == [2]
    assert all(qg.gollnitz_b(n) == qg.gollnitz_c(n) for n in range(40))

    for bad in (lambda: qg.remark3_transform([(2, "AB"), (1, "B")]),
                lambda: qg.check_theorem1(1, 1, 1, 1),
                lambda: qg.run_sweep("nope")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    report = json.loads(qg.run_sweep("key", {"L": (0, 4), "M": (0, 4)}, jobs=2))
    assert report["identity"] == "key" and report["total"] == 4 * 4 * 4 * 5 * 5
    assert report["failures"] == [] and report["elapsed_ms"] == 0
    assert list(report) == ["identity", "total", "failures", "elapsed_ms", "version"]

    print("qgollnitz", qg.__version__, "smoke test passed")


if __name__ == "__main__":
    main()

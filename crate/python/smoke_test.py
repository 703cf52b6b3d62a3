"""Smoke test for the du2 extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import math
from fractions import Fraction

import du2


def close(a, b, tol=1e-10):
    return abs(a - b) <= tol


def main():
    r12 = du2.FrequencyRatio(1, 2)

    levels = du2.enumerate_levels(r12, 6)
    assert [lvl["degeneracy"] for lvl in levels] == [1, 1, 2, 2, 3, 3]
    assert levels[-1]["energy"] == Fraction(13, 4)
    assert sorted(levels[-1]["members"]) == [(0, 5), (1, 3), (2, 1)]

    label, k = du2.cartesian_to_irrep(r12, 2, 1)
    assert (label.level, label.p, label.q, k) == (2, 1, 2, 2)
    assert du2.irrep_to_cartesian(r12, label, k) == (2, 1)
    assert du2.energy_of_irrep(r12, label) == du2.energy_of_cartesian(r12, 2, 1)

    text, coeffs = du2.commutator_polynomial(du2.FrequencyRatio(1, 1))
    assert text == "-2*S0" and coeffs == {(0, 1): Fraction(-2)}

    phi = du2.structure_function(r12, du2.IrrepLabel(2, 1, 2))
    assert phi == [0, 5, 3, 0]

    mats = du2.irrep_matrices(r12, du2.IrrepLabel(1, 1, 1))
    assert mats["u"] == Fraction(-3, 8)
    assert [row[i] for i, row in enumerate(mats["s0"])] == [-0.375, 0.625]

    checks = du2.verify_irrep(r12, du2.IrrepLabel(4, 1, 2))
    assert all(passed for _, _, passed in checks.values()), checks
    assert "w32_casimir_central" in checks

    label = du2.IrrepLabel(2, 1, 2)
    for method in ("tridiagonal", "bisection", "dense"):
        ev = du2.angular_eigenvalues(r12, label, method)
        assert all(close(a, b) for a, b in zip(ev, [-math.sqrt(8), 0.0, math.sqrt(8)])), (method, ev)

    vec = du2.angular_eigenvector(r12, du2.IrrepLabel(2, 1, 1), 0.0)
    want = [0.5, 0.0, math.sqrt(3) / 2]
    assert all(close(a, complex(b), 1e-9) for a, b in zip(vec["amplitudes"], want)), vec
    assert vec["states"] == [(0, 4), (1, 2), (2, 0)]

    for bad in [lambda: du2.FrequencyRatio(2, 4), lambda: du2.irrep_matrices(r12, du2.IrrepLabel(1, 1, 3))]:
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("du2", du2.__version__, "smoke test passed")


if __name__ == "__main__":
    main()

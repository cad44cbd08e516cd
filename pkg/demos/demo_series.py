"""Series walk-through: exact generating functions for interval counts.

The generating series S_k of linear intervals of height k satisfies
simple algebraic equations in the Catalan series A = 1 + t A^2; solving
them with exact integer truncated series reproduces the brute-force
census coefficients.
"""

from alttamari import (
    IncrementFunction,
    catalan,
    census,
    s_coeff,
    s_series,
    solve_tree_series,
)


def main():
    order = 10
    a = solve_tree_series(order)
    print("Catalan series A = 1 + t A^2:")
    print(" ", [a[n] for n in range(order + 1)])
    assert all(a[n] == catalan(n) for n in range(order + 1))
    print()

    print("Coefficients of S_k (linear intervals of height k):")
    for k in range(4):
        s = s_series(k, order)
        print(f"  S_{k}:", [s[n] for n in range(1, order + 1)])
    print()

    n = 6
    table = census(IncrementFunction.ones(n), n)
    print(f"Cross-check against the brute-force census at n = {n}:")
    for k in range(n):
        print(f"  height {k}: census {table.counts.get(k, 0):4d}"
              f"   series {s_coeff(k, n):4d}")


if __name__ == "__main__":
    main()

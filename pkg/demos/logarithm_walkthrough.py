"""Walk through the invariant differential and the logarithm for the two
classical one-dimensional laws over the trivial algebra.

The multiplicative law x + y + xy and the tanh addition law
(x + y)/(1 + xy) both have scalar coefficients, so every step here can be
checked against the closed forms log(1 + x) and arctanh(x).

Run:  python3 demos/logarithm_walkthrough.py
"""

from fractions import Fraction

from fglog import (
    Series,
    TensorElement,
    builtin_algebra,
    check_axioms,
    check_log,
    invariant_differential,
    logarithm,
    rational,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


triv = builtin_algebra("trivial")
x = Series.variable(triv, 2, 2, 0, names=("x", "y"))
y = Series.variable(triv, 2, 2, 1, names=("x", "y"))

# -- the multiplicative law --------------------------------------------------

banner("multiplicative law F(x, y) = x + y + xy")
F = x + y + x * y
print("axioms:", check_axioms(F, order=12))

omega = invariant_differential(F)
print("invariant differential denominator:", omega)

g = logarithm(F, order=12)
print("logarithm through order 12:")
print(" ", g)

one1 = TensorElement.unit(triv, 1)
expected = Series(triv, 1, 1,
                  {(n,): one1 * rational(Fraction((-1) ** (n + 1), n))
                   for n in range(1, 13)},
                  12, ("x",))
print("matches the alternating harmonic series:", g == expected)

report = check_log(F, logarithm(F, order=13), order=12)
print("log equation and differential invariance:", report)

# -- the tanh addition law ---------------------------------------------------

banner("tanh addition law F(x, y) = (x + y)/(1 + xy), stored through 9")
one2 = TensorElement.unit(triv, 2)
terms = {}
for k in range(5):
    q = rational((-1) ** k)
    terms[(k + 1, k)] = one2 * q
    terms[(k, k + 1)] = one2 * q
F = Series(triv, 2, 2, terms, 9, ("x", "y"))
print("axioms:", check_axioms(F, order=9))

g = logarithm(F, order=9)
print("logarithm through order 9:")
print(" ", g)
print("only odd reciprocals survive, i.e. arctanh(x):",
      all(g.coeff((n,)).is_zero() == (n % 2 == 0) for n in range(2, 10)))

# a truncated law certifies one order less than stored once a derivative
# is involved, so the combined check tops out at order 8
report = check_log(F, g, order=8)
print("log equation and differential invariance:", report)

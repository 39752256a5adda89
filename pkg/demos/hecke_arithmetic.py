"""T-basis arithmetic from scratch.

Multiplication in the Hecke algebra follows the two deformed rules:

    T_s T_w = T_{sw}                 when the product gets longer
    T_s T_w = q T_{sw} + (q-1) T_w   when it gets shorter

Everything below is exact over Q(q).
"""

from heckestab import HeckeElement, Permutation, decompose, mult, regular_representation, tau

n = 3
s1 = Permutation.simple(n, 1)
s2 = Permutation.simple(n, 2)

T1 = HeckeElement.basis(n, s1)
T2 = HeckeElement.basis(n, s2)

# The quadratic relation: T_s^2 = q + (q-1) T_s.
print("T_1 * T_1 =", mult(T1, T1))

# The braid relation holds on the nose in the T-basis.
lhs = mult(mult(T1, T2), T1)
rhs = mult(mult(T2, T1), T2)
print("T_1 T_2 T_1 =", lhs)
print("T_2 T_1 T_2 =", rhs)
print("braid relation:", lhs == rhs)

# tau embeds H_n into H_{n+1} by extending each permutation with a
# fixed point at the end.  It is an algebra map: check on a product.
a = mult(T1, T2)
print("tau respects products:", tau(mult(T1, a)) == mult(tau(T1), tau(a)))

# The regular module of H_3 is 6-dimensional and decomposes with the
# same multiplicities as for the symmetric group: each Specht module
# appears as often as its dimension.
reg = regular_representation(3)
print("regular H_3 decomposition:", decompose(reg))

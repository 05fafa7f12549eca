"""Compositions of r and the parabolic subgroups of GL_r(F_2) they index."""

from glcohom.grpcore import close_generators, order_factorization
from glcohom.parabolic import compositions, dual, gl_order, parabolic_generators, parabolic_order, symmetric_compositions

# 2^(r-1) compositions; reversal pairs off all but the symmetric ones
for r in range(1, 7):
    sym = symmetric_compositions(r)
    print(f"r={r}: {len(compositions(r))} compositions, {len(sym)} symmetric")

print("symmetric compositions of 6:", ", ".join(map(str, symmetric_compositions(6))))
print("dual of (1,1,2):", dual(compositions(4)[3]))

# orders from the formula q^(radical dim) * product of GL_{lambda_i}(q)
for lam in symmetric_compositions(6, proper_only=True):
    two, odd = order_factorization(parabolic_order(lam, 2))
    print(f"P{lam}: order {parabolic_order(lam, 2):>10,} = 2^{two.bit_length() - 1} * {odd}")
print(f"GL_6(F_2): {gl_order(6, 2):,}")

# explicit enumeration agrees with the formula for every composition of 4
for lam in compositions(4):
    t = close_generators(parabolic_generators(lam))
    print(lam, t.order, t.order == parabolic_order(lam, 2))

# Finite fields F_q, their generators, the quadratic character and U_k.
from legmat.field import make_field, power_sum, quadratic_character, subgroup_Uk

# F_9 is built as F_3[x]/(x^2 + 1); the first primitive element is x + 1
F9 = make_field(9)
print(F9, "modulus", F9.modulus, "generator", F9.g)

x = F9.element([0, 1])
print("x * x =", x * x)                      # 2, i.e. -1
print("powers of g:", [F9.g ** i for i in range(8)])

# phi(a) is 1 on non-zero squares, -1 on non-squares, 0 at zero
F7 = make_field(7)
print("phi over F_7:", [quadratic_character(F7(a)) for a in range(7)])

# U_k is the unique subgroup of order k in F_q^x
F13 = make_field(13)
print("U_4 in F_13:", subgroup_Uk(F13, 4))
print("U_4 in F_9:", subgroup_Uk(F9, 4))

# sum of x^r over the field vanishes unless (q - 1) | r
print("power sums over F_9:", [power_sum(F9, r).value for r in range(1, 17)])

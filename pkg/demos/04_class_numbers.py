# h(-p) two ways, Mordell's congruence, and the symbol of det D_{(p-1)/2}.
from legmat.builders import build_Dk
from legmat.classnum import class_number, reduced_forms
from legmat.closed_forms import symbol_Dhalf
from legmat.field import is_prime, legendre, make_field
from legmat.matrix import determinant

print("reduced forms of discriminant -23:", reduced_forms(23))

for p in [p for p in range(7, 120, 4) if is_prime(p)]:
    r = class_number(p)
    det = determinant(build_Dk(make_field(p), (p - 1) // 2)).value
    print(f"p={p:3d} h={r.h_forms} (sum: {r.h_dirichlet}) mordell={r.mordell_ok} "
          f"det={det:3d} symbol={legendre(det, p):2d} predicted={symbol_Dhalf(p, r.h_forms):2d}")

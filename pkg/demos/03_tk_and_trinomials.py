# Trinomial coefficients, det T_k, and the singularity criterion.
from legmat.builders import build_Tk
from legmat.closed_forms import det_Thalf_closed, det_Tk_closed, l_factors, tk_singularity_criterion
from legmat.combinatorics import central_trinomial, trinomial_row
from legmat.field import divisors, legendre, make_field
from legmat.matrix import determinant

print("(x + 1/x + 1)^3 mod 11:", trinomial_row(3, 11).coeffs)
print("central trinomials mod 101:", [central_trinomial(n, 101) for n in range(10)])

F = make_field(25)
for k in divisors(F.q - 1)[1:]:
    brute = determinant(build_Tk(F, k)).value
    print(f"q=25 k={k:2d}  brute={brute}  closed={det_Tk_closed(F, k).value}"
          f"  factors={l_factors(F, k)}  singular={tk_singularity_criterion(F, k)}")

# the k = (q-1)/2 value formula disagrees with the general one; the symbol
# formula agrees for q = 3 (mod 4) but not for every q = 1 (mod 4)
for q in (5, 7, 11, 13, 17, 19, 23, 25, 27):
    F = make_field(q)
    brute = determinant(build_Tk(F, (q - 1) // 2)).value
    r = det_Thalf_closed(F)
    print(f"q={q:2d} brute={brute:2d} printed={r.value:2d} "
          f"symbol brute={legendre(brute, F.p):2d} printed={r.symbol:2d}")

# det D_k against its closed form, plus the circulant form for odd k.
from legmat.builders import build_circulant_b, build_Dk
from legmat.closed_forms import det_Dk_closed, s_k
from legmat.field import divisors, legendre, make_field
from legmat.matrix import build_circulant, determinant

F = make_field(13)
print("D_3 over F_13:\n", build_Dk(F, 3).codes)

for k in divisors(F.q - 1)[1:]:
    brute = determinant(build_Dk(F, k)).value
    closed = det_Dk_closed(F, k)
    print(f"k={k:2d}  brute={brute:2d}  closed={closed.value:2d}  parts={closed.components}")

# for odd k, D_k has the same determinant as a symmetric circulant, and the
# Legendre symbol of det D_k is that of s_k
for q in (31, 43, 49, 121):
    F = make_field(q)
    for k in divisors(q - 1):
        if k == 1 or k % 2 == 0:
            continue
        det = determinant(build_Dk(F, k))
        circ = determinant(build_circulant(build_circulant_b(F, k)))
        sym = (legendre(det.value, F.p), legendre(s_k(F, k), F.p)) if det else None
        print(f"q={q:3d} k={k:2d}  det={det.value:3d}  circulant={circ.value:3d}  symbols={sym}")

# Related determinant families, each next to its claimed value.
from legmat import gallery
from legmat.field import is_prime, legendre, make_field

for p in (5, 7, 11, 13, 17):
    print(f"p={p:2d} reciprocal det={gallery.sun_reciprocal_det(p):2d}"
          f" expected={gallery.sun_reciprocal_expected(p):2d}")

for p in (7, 11, 19, 23):
    print(f"p={p:2d} 1/(i^2+j^2) det={gallery.inverse_squares_det(p):2d}"
          f" expected={gallery.inverse_squares_expected(p):2d}")

for d in range(1, 11):
    det, sym = gallery.S_dp(11, d)
    print(f"S({d},11) = {det:6d}  (d/11)={legendre(d, 11):2d}  (-S/11)={sym:2d}")

for q in (5, 11, 17, 23, 125):
    F = make_field(q)
    print(f"q={q:3d} 1/(a^2-ab+b^2) det={gallery.wsn_det(F)} expected={gallery.wsn_expected(F)}")

print("k-th power residues, p = 13, k = 4:", gallery.kth_power_residues(13, 4))
print("1/(a_i+a_j) det:", gallery.wu_wang_det(13, 4), "expected", gallery.wu_wang_expected(13, 4))

print("S_7(1,1) report:", gallery.luo_sun_report(7, 1, 1))

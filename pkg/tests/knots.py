from lspace_knots.knots import Cable, Torus, Unknot
from lspace_knots.poly import LaurentPoly

UNKNOT = Unknot()
TREFOIL = Torus(p=2, q=3)
T25 = Torus(p=2, q=5)
T34 = Torus(p=3, q=4)

# genus 2, not an L-space knot
C21_TREFOIL = Cable(p=2, q=1, companion=TREFOIL)
# genus 5 L-space knot
C27_TREFOIL = Cable(p=2, q=7, companion=TREFOIL)
# 13 < 2 * (2 * 5 - 1), so not an L-space knot
C2_13 = Cable(p=2, q=13, companion=C27_TREFOIL)
# 19 >= 18, an L-space knot
C2_19 = Cable(p=2, q=19, companion=C27_TREFOIL)

TREFOIL_POLY = LaurentPoly({1: 1, 0: -1, -1: 1})
T34_POLY = LaurentPoly({3: 1, 2: -1, 0: 1, -2: -1, -3: 1})
C27_TREFOIL_POLY = LaurentPoly({5: 1, 4: -1, 1: 1, 0: -1, -1: 1, -4: -1, -5: 1})

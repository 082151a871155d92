"""Which face scales on the quadrant extend to a corner regularization?"""
from fractions import Fraction

from logcorners.geometry import Chart, MonoidElement
from logcorners.geometry.scale import Regularization, check_regularization

Q = Chart(basic=("r1", "r2"))


def quadrant(a1, a2, f1, f2):
    # scale f2 * r2^a2 d/dt1 on the face r1 = 0 and f1 * r1^a1 d/dt2 on r2 = 0
    faces = {
        "r1": {"t1": MonoidElement(coeff=f2) * MonoidElement.coordinate("r2", power=a2)},
        "r2": {"t2": MonoidElement(coeff=f1) * MonoidElement.coordinate("r1", power=a1)},
    }
    return Regularization(Q, {}, faces, {frozenset(("r1", "r2")): {"t1": None, "t2": None}})


cases = [(0, 0, 3, 5), (1, 1, 2, 3), (1, 1, 2, Fraction(1, 2)), (2, 1, 2, 3)]
for a1, a2, f1, f2 in cases:
    rep = check_regularization(quadrant(a1, a2, Fraction(f1), Fraction(f2)))
    sol = {str(k): str(v) for k, v in (rep.solution or {}).items()}
    print(f"(a1,a2)=({a1},{a2}) f1(0)={f1} f2(0)={f2}: {rep.status} {sol}")

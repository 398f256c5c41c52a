"""Hand-built and searched-then-frozen point configurations."""
import math


def polar_point(r, degrees, origin=(0.0, 0.0)):
    t = math.radians(degrees)
    return (origin[0] + r * math.cos(t), origin[1] + r * math.sin(t))


# Four points a, b, c, d.  From a, b (1 deg) and c (30 deg) share cone 0;
# |ac| = 0.95 < |ab| = 1 but b projects closer onto the 30 deg bisector, so
# Theta_6 picks a->b and Y_6 picks a->c.  b->a and c->a share cone 0 of a and
# d->c, a->c share cone 3 of c, so Yao-Yao drops b->a and d->c.
A, B, C, D = 0, 1, 2, 3
_c = polar_point(0.95, 30.0)
CROSSED_CHOICE = [(0.0, 0.0), polar_point(1.0, 1.0), _c, polar_point(1.0, 181.0, origin=_c)]

# ab is a Theta_6 edge but not a Y_36 edge: b' is nearer in the same 10 deg
# cone of a while lying outside T(a, b).
WITNESS_DETOUR = [(0.0, 0.0), (1.0, 0.1), polar_point(0.99, 9.0)]

# a -> u lands inside the trapezoid, then u -> b finishes the path.
TRAPEZOID_STEP = [(0.0, 0.0), (1.0, 0.3), (0.5, 0.1)]

# Smallest matches found by random search on a 0.01 lattice, k = 6.
# Each entry: points, and the (a, b, a', b') roles expected to match.
LEMMA_INSTANCES = {
    "L-bb": ([(0.31, 0.51), (0.26, 0.39), (0.53, 0.16), (0.28, 0.42)],
             dict(a=2, b=3, a_prime=None, b_prime=1)),
    "L-aa1": ([(0.31, 0.51), (0.26, 0.39), (0.53, 0.16), (0.28, 0.42)],
              dict(a=3, b=None, a_prime=1, b_prime=2)),
    "L-aa2": ([(0.4, 0.1), (0.03, 0.73), (0.49, 0.04), (0.22, 0.95), (0.54, 0.12), (0.14, 0.81)],
              dict(a=4, b=5, a_prime=0, b_prime=1)),
    "L-aa3": ([(0.02, 0.05), (0.63, 0.91), (0.65, 0.86), (0.63, 0.81), (0.88, 0.38),
               (0.0, 0.08), (0.62, 0.66)],
              dict(a=1, b=0, a_prime=2, b_prime=5)),
}

"""T-space dimensions at the three small commuting tuples, against the regular component.

The T-space contains the tangent space, so its dimension caps the dimension
of every component through the point. A T-space smaller than the regular
component's dimension puts the point on some other component.
"""

from commvar.commuting import joint_centralizer, reg_dim, tspace, tspace_padded
from commvar.matrixreal import example_point

for label, ms in [("sl4-guralnick", (4, 5, 6, 8)), ("sp4-triple", (3, 4, 5)), ("g2-triple", (3, 4, 5))]:
    p = example_point(label)
    ls = p.algebra
    base = tspace(ls, p.tuple).dim
    joint = joint_centralizer(ls, p.tuple).dim
    print("%s: T-space %d at m=%d, joint centralizer %d" % (label, base, len(p.tuple), joint))
    for m in ms:
        print("   m=%d  T=%3d  reg=%3d" % (m, tspace_padded(ls, p.tuple, m), reg_dim(ls, m)))

"""The so_{4s} family: centralizer sizes, the block shape and where the bound overtakes."""

from commvar.commuting import centralizer
from commvar.gradings import so_reducibility_threshold
from commvar.matrixreal import example_point
from commvar.reproduction import so_commutator_agreement

for s in range(2, 7):
    p = example_point("so4s-x1", s=s)
    dim_c = centralizer(p.algebra, p.tuple[0]).dim
    th = so_reducibility_threshold(s)
    print("s=%d  dim so=%3d  dim C(x1)=%3d  bound=%4d  regular=%4d  reducible=%s  closed-form ok %d/20"
          % (s, p.algebra.dim, dim_c, th.lower_bound, th.regular, th.reducible,
             so_commutator_agreement(s, 20)))

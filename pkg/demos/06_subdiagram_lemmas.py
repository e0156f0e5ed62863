"""Sub-diagram bookkeeping: a regular element of the central torus and its centralizer."""

from commvar.chevalley import chevalley_algebra, subalgebra_package
from commvar.commuting import find_regular_h, normalizer

for name, nodes in [("C2", (1,)), ("B3", (1, 2)), ("F4", (1, 2)), ("E8", tuple(range(7)))]:
    ls = chevalley_algebra(name)
    pkg = subalgebra_package(ls, nodes)
    cert = find_regular_h(ls, pkg)
    N = normalizer(ls, pkg.H_1)
    print("%s over nodes %s: dim L'=%d, h coords %s, dim C(h)=%d (expected %d), N(H1)=L'+H1: %s"
          % (name, [n + 1 for n in nodes], pkg.L_prime.dim, cert.coordinates, cert.centralizer_dim,
             cert.expected_dim, N == pkg.L_prime + pkg.H_1))

"""Root systems and Chevalley structure constants, using G2 as the running example."""

from commvar.chevalley import chevalley_algebra, structure_constant
from commvar.rootsys import build_root_system, embeddings

g2 = build_root_system("G2")
print("G2 positive roots by height:", g2.positive)
print("Cartan matrix:", g2.cartan)

ls = chevalley_algebra("G2")
for a, b in [((1, 0), (0, 1)), ((1, 0), (1, 1)), ((-1, 0), (1, 1)), ((3, 1), (2, 1))]:
    print("N%s,%s = %s" % (a, b, structure_constant(ls, a, b)))

# Sub-diagrams: E7 sits in E8 on the first seven nodes, B2 = C2 sits in B3 on nodes 2 and 3.
print("E7 in E8:", embeddings(build_root_system("E8"), "E7"))
print("C2 in B3:", embeddings(build_root_system("B3"), "C2"))

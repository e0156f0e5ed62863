"""The E7 grading by an sl2 neutral element and the dimension chain that follows from it."""

import json

from commvar.gradings import e7_reducibility_certificate

cert = e7_reducibility_certificate()
for st in cert.stages:
    print("%-26s expected %-6s computed %-6s %s" % (st.name, st.expected, st.computed,
                                                  "ok" if st.passed else "MISMATCH"))

pb = cert.printed_basis
print("\nprinted basis elements needing a sign flip as written:", len(pb.residuals))
print("root vectors rescaled by -1 to reconcile them:", sorted(pb.rescaling))
print("all 35 in the centralizer afterwards:", pb.calibrated_membership)
print(json.dumps(cert.chain))

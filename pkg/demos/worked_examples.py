"""Three small algebras, from presentation file to classification.

Run from the repository root:  python3 demos/worked_examples.py
"""

import os

from monogp.algebra import build_algebra
from monogp.classify import find_overlaps, is_gp_cyclic, perfect_pairs, perfect_paths, stable_category_shape
from monogp.presentation import parse_file
from monogp.quadratic import gorenstein_report, relation_quiver

HERE = os.path.join(os.path.dirname(__file__), "data")


def load(name):
    return build_algebra(parse_file(os.path.join(HERE, name)))


def show(name):
    A = load(name)
    print("==", name, "dimension", A.dimension)
    print("   minimal relations:", [r.label() for r in A.F])
    print("   perfect pairs:", [(x.p.label(), x.q.label()) for x in perfect_pairs(A)])
    C = perfect_paths(A)
    for e in C:
        cycle = [p.label() for p in e.cycle]
        print("   perfect %-6s cycle %s  dims %s" % (e.perfect_path.label(), cycle, e.dim_vector))
    shape = stable_category_shape(A)
    print("   overlaps:", len(find_overlaps(A)), " cycle lengths:", shape.cycle_lengths)
    return A


# A 2-cycle where only the walk a b a b vanishes.  One perfect path, a b,
# whose relation-cycle has length one: it is its own syzygy.
show("z2_babaa.alg")

# Both length-two cycles vanish and a third vertex feeds in through c.
# Only a and b are perfect, yet A(c b) is still Gorenstein-projective: its
# syzygy is A a.
A = show("three_vertex.alg")
cb = A.quiver.path(["c", "b"])
print("   A(c b):", is_gp_cyclic(A, cb), "though 'c b' is not perfect")

# A quadratic algebra: the relation quiver decides everything.
A = show("gentle.alg")
R = relation_quiver(A)
for c in R.components:
    print("   component", c.vertices, c.kind, c.longest_path_length)
rep = gorenstein_report(A)
print("   Gorenstein:", rep.gorenstein, "bound", rep.gorenstein_bound, "CM-free:", rep.cm_free)

"""Kupisch series, the theta map and theta-cyclically black vertices.

For a Nakayama algebra the perfect paths are read off two vertex sets, which
this script prints next to the classifier's answer.
"""

from monogp.classify import perfect_paths
from monogp.nakayama import kupisch_algebra, nakayama_data, perfect_paths_nakayama

for c in [(4, 5), (2, 3), (3, 4), (2, 2, 3), (3, 3, 3), (2, 3, 3, 2), (4, 4, 3, 3, 4)]:
    A = kupisch_algebra(c)
    N = nakayama_data(A)
    closed = sorted(perfect_paths_nakayama(A))
    agree = closed == perfect_paths(A).perfect_paths
    print(
        "c=%-16s theta=%-16s black=%-12s cyclic-black=%-10s perfect=%d agree=%s"
        % (c, N.theta, sorted(N.black), sorted(N.theta_cyclically_black), len(closed), agree)
    )

"""Depth of subgroups and of semisimple algebra inclusions.

Modules:
    intmatrix  inclusion matrices, alternating powers, depth
    bratteli   the bipartite (Bratteli) graph and depth from distances
    perm       permutation groups, cores, conjugate intersections, bounds
    chartab    character tables, induction/restriction, the T and U operators
    young      partitions and the branching graphs of S_n and A_n
    cli        command-line interface
"""

__version__ = "0.1.0"

"""
Default capacities. Every operation that can blow up takes its cap as a keyword
argument and falls back to the values below.
"""

# coset actions built by coset_action
DEGREE_CAP = 5000
# default degree envelope of a verification run
VERIFY_DEGREE_CAP = 1000
# intersections, element enumeration, s-arcs per level in the brute-force oracle
ENUMERATION_CAP = 10**6
# group order accepted by the subgroup lattice
SUBGROUP_CAP = 10**4
S_CAP = 5
# s-arcs per level the verifier lets the oracle enumerate
ORACLE_BUDGET = 10**5
ZSIGMONDY_BIT_CAP = 4096
# candidates r = 1 + j*m tried by trial division before handing the cofactor to sympy
ZSIGMONDY_SCAN_LIMIT = 2**16

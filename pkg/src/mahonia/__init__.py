"""
Exact q-polynomials, growth words, permutation statistics and bijections
for Mahonian and Euler-Mahonian equidistribution checks.
"""

from .qseries import (QPoly, eulerian_q, q_binomial, q_factorial, q_int,
                      stirling_q, stirling_tilde_q, wagner_rhs, zeng_zhang_rhs)
from .words import (BlockStats, block_stats, coord_stat, coord_total,
                    enumerate_rgf, enumerate_urg, is_rgf, is_urg, parse_word)
from .perms import (count_vincular, descriptors, enumerate_perms, mahonian,
                    parse_pattern, parse_perm)
from .barred import BarredPermutation, parse_barred, theta, theta_inv
from .bijections import eta, phi_fhv, phi_rgf, psi, xi, zeta
from .omp import OrderedMultisetPartition, enumerate_omp, iota, parse_omp
from .harness import DistributionRequest, distribution, table1, verify

__version__ = "0.1.0"

"""Exact octonion-valued exterior forms and the Spin(9)-invariant 8-form on O^2."""

from .octonion import Octonion, basis, conj, mul, rmul_matrix, lmul_matrix
from .exterior import ExtForm, hodge_star, wedge
from .octoform import OctForm, owedge, obar, oreal
from .canon import psi8, scaled_psi8, psi_blocks, cayley, associative, kaehler
from .spin9 import gen_I, gen_Ijk, one_param, lie_derivative, pullback
from .table3 import classify_table3

__version__ = "0.1.0"

"""Exact rational Lie-algebra computations for commuting varieties.

Submodules, roughly bottom-up: ``exactla`` (rational matrices and subspaces),
``rootsys``, ``chevalley``, ``matrixreal`` (sl/sp/so as matrices and the
embedded example points), ``commuting``, ``gradings``, ``reproduction`` and
``cli``.
"""

from .chevalley import bracket, chevalley_algebra, subalgebra_package
from .commuting import (centralizer, find_regular_h, joint_centralizer, normalizer, reg_dim,
                        tspace, tspace_padded)
from .exactla import RationalMatrix, Subspace, intersect, kernel, rank, span
from .gradings import e7_reducibility_certificate, grade_by, sl2_complete
from .matrixreal import build_classical, example_point, parse_algebra
from .reproduction import run_checks
from .rootsys import build_root_system

__version__ = "0.1.0"

__all__ = [
    "RationalMatrix", "Subspace", "intersect", "kernel", "rank", "span",
    "build_root_system", "chevalley_algebra", "bracket", "subalgebra_package",
    "build_classical", "parse_algebra", "example_point",
    "centralizer", "joint_centralizer", "normalizer", "tspace", "tspace_padded",
    "find_regular_h", "reg_dim",
    "grade_by", "sl2_complete", "e7_reducibility_certificate",
    "run_checks",
]

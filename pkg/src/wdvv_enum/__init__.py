"""Exact computation of open Gromov-Witten and Welschinger invariants of
blowups of the projective plane at real and conjugate point configurations.

The package is organized around a memoized recursion over relative homology
classes [d, alpha, beta] with k boundary points:

* :mod:`wdvv_enum.core_index` -- index arithmetic (Maslov index, grading,
  canonical keys, guarded multinomials).
* :mod:`wdvv_enum.closed_gw` -- closed Gromov-Witten invariants of the blowup,
  derived from the closed WDVV equation, and the aggregates consumed by the
  open recursion.
* :mod:`wdvv_enum.open_gw` -- the open WDVV relations and the recursion driver
  computing Gamma_{[d,alpha,beta],k}.
* :mod:`wdvv_enum.welschinger` -- the sign machinery converting Gamma values
  to signed real curve counts W.
* :mod:`wdvv_enum.cache_store` -- persistent text cache of computed values.
* :mod:`wdvv_enum.cli` -- command line interface.
"""

from .core_index import (
    CanonicalKey,
    canonical_key,
    chern_number,
    double,
    guarded_binomial,
    guarded_multinomial,
    interior_points,
    key_less,
    maslov_index,
    self_intersection,
)
from .closed_gw import ClosedEngine
from .open_gw import OpenEngine
from .welschinger import (
    boundary_class_mod2,
    gamma_from_welschinger,
    s_p,
    t_p,
    welschinger_from_gamma,
)
from .cache_store import MemoStore, load_store, save_store

__all__ = [
    "CanonicalKey",
    "ClosedEngine",
    "MemoStore",
    "OpenEngine",
    "boundary_class_mod2",
    "canonical_key",
    "chern_number",
    "double",
    "gamma_from_welschinger",
    "guarded_binomial",
    "guarded_multinomial",
    "interior_points",
    "key_less",
    "load_store",
    "maslov_index",
    "s_p",
    "save_store",
    "self_intersection",
    "t_p",
    "welschinger_from_gamma",
]

__version__ = "0.1.0"

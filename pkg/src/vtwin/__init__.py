"""Computational toolkit for the virtual twin groups VT_n and their pure subgroups PVT_n.

PVT_n is a right-angled Artin group, so the word problem for VT_n reduces to
rewriting into PVT_n plus a RAAG normal form.  The main entry points:

* :mod:`vtwin.words` and :mod:`vtwin.perms` for VT_n words and the map to S_n
* :mod:`vtwin.rewriting` for the rewriting process and ``vt_is_identity``
* :mod:`vtwin.raag` and :mod:`vtwin.graph` for PVT_n words and its defining graph
* :mod:`vtwin.morphisms` for endomorphisms and automorphisms of PVT_n
* :mod:`vtwin.theorems` for the batch verification suites
"""

from .config import DEFAULT, Config
from .errors import (
    DominationViolation,
    InvalidInput,
    InvalidStrandCount,
    NotAComponentUnion,
    NotApplicable,
    NotInKernel,
    ResourceLimit,
    VTwinError,
    WordParseError,
)
from .perms import Perm, SignedLambda, act, parse_perm, pi_image, schreier_tuple, schreier_word
from .raag import RaagWord, expand_to_vtn, normal_form, parse_raag, raag_equal
from .rewriting import decompose, rewrite_tau, vt_equal, vt_is_identity
from .words import VWord, defining_relators, parse_word

__version__ = "0.1.0"

__all__ = [
    "Config", "DEFAULT",
    "VTwinError", "WordParseError", "InvalidInput", "InvalidStrandCount", "NotApplicable",
    "NotInKernel", "ResourceLimit", "NotAComponentUnion", "DominationViolation",
    "VWord", "parse_word", "defining_relators",
    "Perm", "SignedLambda", "act", "parse_perm", "pi_image", "schreier_tuple", "schreier_word",
    "RaagWord", "parse_raag", "normal_form", "raag_equal", "expand_to_vtn",
    "rewrite_tau", "vt_is_identity", "vt_equal", "decompose",
]

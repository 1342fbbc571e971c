"""Alternating sign matrices, their Bruhat-order lattice, and intersections of Verma submodules."""

from .asm import Asm, asm_leq, embed_permutation, enumerate_asm, join, meet
from .errors import AsmvError, InputError, ResourceLimitError, VerificationError
from .perm import Permutation, bruhat_leq, enumerate_sn, length
from .tetra import TetraPoint, build_tetra, ji_to_tetra, tetra_to_ji
from .verma import VermaIntersection, from_asm, from_permutation, intersect, socle, to_asm

__version__ = "0.1.0"

__all__ = [
    "Asm",
    "AsmvError",
    "InputError",
    "Permutation",
    "ResourceLimitError",
    "TetraPoint",
    "VerificationError",
    "VermaIntersection",
    "asm_leq",
    "build_tetra",
    "bruhat_leq",
    "embed_permutation",
    "enumerate_asm",
    "enumerate_sn",
    "from_asm",
    "from_permutation",
    "intersect",
    "ji_to_tetra",
    "join",
    "length",
    "meet",
    "socle",
    "tetra_to_ji",
    "to_asm",
]

"""Rigidity of Schubert classes in classical partial flag varieties.

Library layout:

* ``indices``      index shapes, validation, dimension/duality, enumeration
* ``parser``       literal grammar for indices and restriction sequences
* ``chow``         type-A Littlewood-Richardson oracle and zero criterion
* ``projections``  push-forwards and generic fiber classes
* ``rigidity``     essential/rigid sub-indices and class verdicts
* ``multirigid``   multi-rigidity and the gamma invariants
* ``restriction``  corank-raising degeneration of restriction sequences
* ``cli``          the ``schubrigid`` command
"""

__version__ = "0.1.0"

from .indices import (  # noqa: F401
    ChowClass,
    SchubertIndex,
    SpaceDescriptor,
    SpaceKind,
    dimension,
    dual,
    enumerate_indices,
    flagged_index,
    flagged_pair_index,
    lambda_notation,
    pair_index,
    plain_index,
    rank_table,
    render_literal,
    validate,
)
from .parser import parse_index, parse_sequence, parse_space  # noqa: F401

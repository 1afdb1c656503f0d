"""Finite semirings, semimodules, and lattices.

Thin Python layer over the compiled core: decision procedures for the
cyclic-projectivity (CP) property, congruence machinery, simpleness checks,
lattice endomorphism semirings, and exhaustive enumeration of small
structures.
"""

import json as _json

try:
    from . import _core
except ImportError:  # in-tree builds put the extension directly on sys.path
    import _core

Semiring = _core.Semiring
Lattice = _core.Lattice
AlgebraError = _core.AlgebraError

construct = _core.construct
validate_semiring = _core.validate_semiring
semiring_from_json = _core.semiring_from_json
matrix_semiring = _core.matrix_semiring
direct_sum = _core.direct_sum
corner_semiring = _core.corner_semiring
opposite = _core.opposite
is_ideal_simple = _core.is_ideal_simple
is_congruence_simple = _core.is_congruence_simple
is_simple = _core.is_simple
infinite_element = _core.infinite_element
peirce_decompositions = _core.peirce_decompositions
are_isomorphic = _core.are_isomorphic
matrix_cp_splitting = _core.matrix_cp_splitting
enumerate_semirings = _core.enumerate_semirings
congruence_blocks = _core.congruence_blocks

validate_lattice = _core.validate_lattice
lattice_from_json = _core.lattice_from_json
chain_lattice = _core.chain_lattice
diamond_m3 = _core.diamond_m3
pentagon_n5 = _core.pentagon_n5
is_distributive = _core.is_distributive
tchain = _core.tchain
tchain_interval_condition = _core.tchain_interval_condition
quotient_distributivity_condition = _core.quotient_distributivity_condition
endomorphism_semiring = _core.endomorphism_semiring
enumerate_distributive_lattices = _core.enumerate_distributive_lattices

suite_ids = _core.suite_ids


def classify(semiring):
    """Property report of a semiring as a dict of {value, witness} entries."""
    return _json.loads(_core.classify_json(semiring))


def is_cp(semiring, exhaustive=False, side="right"):
    """CP verdict: {'is_cp', 'witness_blocks', 'splittings'}."""
    return _json.loads(_core.is_cp_json(semiring, exhaustive, side))


def run_suite(suite_id):
    """Run a named verification suite; returns its report as a dict."""
    return _json.loads(_core.run_suite_json(suite_id))


__all__ = [name for name in dir() if not name.startswith("_")]

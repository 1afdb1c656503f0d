import pytest

import semiring_lab as sl


def test_construct_and_tables():
    b3 = sl.construct("B3")
    assert b3.size == 3
    assert b3.add(1, 2) == 2
    assert b3.mul(2, 2) == 2
    assert b3.labels() == ["0", "1", "2"]


def test_cp_verdicts():
    assert sl.is_cp(sl.construct("B3"))["is_cp"] is True
    assert sl.is_cp(sl.construct("B31"))["is_cp"] is True
    verdict = sl.is_cp(sl.construct("Z4"))
    assert verdict["is_cp"] is False
    assert verdict["witness_blocks"] == [[0, 2], [1, 3]]


def test_left_side_matches_for_commutative():
    b31 = sl.construct("B31")
    assert sl.is_cp(b31, side="left")["is_cp"] is True


def test_classify_flags():
    report = sl.classify(sl.construct("B31"))
    assert report["anti_bounded"]["value"] is True
    assert report["zerosumfree"]["value"] is True
    assert report["right_subtractive"]["value"] is False


def test_congruences_and_simpleness():
    b3 = sl.construct("B3")
    assert len(sl.congruence_blocks(b3, "semiring")) == 3
    m2b = sl.construct("MatB 2")
    assert sl.is_simple(m2b)
    assert not sl.is_simple(b3)


def test_matrix_certificate():
    assert sl.matrix_cp_splitting(sl.construct("B"), 3) is None


def test_enumeration_counts():
    assert len(sl.enumerate_semirings(2)) == 2
    assert len(sl.enumerate_semirings(3)) == 6


def test_lattice_and_endomorphisms():
    chain = sl.chain_lattice(3)
    assert sl.is_distributive(chain)
    assert sl.tchain(chain) == [0, 1, 2]
    assert sl.tchain_interval_condition(chain)
    end = sl.endomorphism_semiring(chain)
    assert end.size == 6
    square = sl.enumerate_distributive_lattices(2)[-1]
    m2b = sl.construct("MatB 2")
    candidates = [
        lattice
        for lattice in sl.enumerate_distributive_lattices(2)
        if lattice.size == 4
    ]
    assert len(candidates) == 1
    iso = sl.are_isomorphic(sl.endomorphism_semiring(candidates[0]), m2b)
    assert iso is not None
    assert square.size in (3, 4)


def test_forbidden_lattices_are_not_cp():
    end_m3 = sl.endomorphism_semiring(sl.diamond_m3())
    assert end_m3.size == 50
    assert sl.is_cp(end_m3)["is_cp"] is False


def test_infinite_elements():
    assert sl.infinite_element(sl.construct("B3")) == 2
    assert sl.infinite_element(sl.construct("Z4")) is None


def test_json_round_trip():
    ext = sl.construct("Ext Z2")
    back = sl.semiring_from_json(ext.to_json())
    assert back == ext
    assert back.labels() == ["0", "e", "1", "inf"]


def test_validation_error_surfaces():
    with pytest.raises(sl.AlgebraError):
        sl.validate_semiring(2, [0, 1, 1, 1], [0, 0, 0, 0], 0, 1)


def test_verification_suite():
    report = sl.run_suite("facts-4.12")
    assert report["passed"] is True
    assert len(report["items"]) >= 2

import pytest

from invpaths.bijections import (
    Tiling,
    is_to_schroeder,
    is_to_tiling,
    phi,
    phi_inv,
    psi,
    psi_inv,
    schroeder_to_is,
    tiling_to_is,
)
from invpaths.errors import BadBoardLength, PatternViolation
from invpaths.fpaths import EMPTY_PATH, LabeledFPath, enumerate_lf
from invpaths.inversions import InversionSequence, enumerate_is, stats
from invpaths.paths import (
    SchroederPath,
    UvdPath,
    enumerate_schroeder,
    enumerate_uvd,
    vox_word,
)
from tests.test_fpaths import figure_path

LONG_EXAMPLE = (0, 0, 0, 0, 1, 4, 4, 4, 4, 6, 7, 7, 9, 7, 9, 7, 9, 9, 8, 7, 8, 8, 6, 6, 4)
S19_WORD = (
    "ud" + "uududuuddd" + "ud" + "uuuududuuduud"
    + "uuuuduuuuuduuuuuuuuudvvvdvvvvvvd"
)


def test_phi_base_and_examples():
    assert phi(EMPTY_PATH).entries == (0,)
    q4 = LabeledFPath(figure_path().steps[:4])
    assert phi(q4).entries == (0, 0, 0, 0, 1)
    assert phi(figure_path()).entries == LONG_EXAMPLE


def test_phi_statistics():
    for n in range(0, 6):
        for q in enumerate_lf(n):
            e = phi(q)
            st = stats(e)
            assert len(e) == n + 1
            assert st.rank == q.height
            x_last, y_last = q.points()[-1]
            assert st.max_val == x_last
            assert st.prmx == y_last + 1


def test_phi_inv_examples():
    assert phi_inv(InversionSequence((0,))) == EMPTY_PATH
    q4 = LabeledFPath(figure_path().steps[:4])
    assert phi_inv(InversionSequence((0, 0, 0, 0, 1))) == q4
    assert phi_inv(InversionSequence(LONG_EXAMPLE)) == figure_path()
    with pytest.raises(PatternViolation):
        phi_inv(InversionSequence((0, 1, 0, 2)))


def test_phi_bijective_small():
    for n in range(0, 6):
        domain = enumerate_lf(n)
        images = [phi(q) for q in domain]
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_is(n + 1, ["102"]))
        for q, e in zip(domain, images):
            assert phi_inv(e) == q


def test_psi_base_and_examples():
    assert psi(EMPTY_PATH).word == "ud"
    q3 = LabeledFPath(figure_path().steps[:3])
    assert psi(q3).word == "udududud"
    assert psi(figure_path()).word == S19_WORD


def test_psi_inv_examples():
    assert psi_inv(UvdPath("ud")) == EMPTY_PATH
    q3 = LabeledFPath(figure_path().steps[:3])
    assert psi_inv(UvdPath("udududud")) == q3
    assert psi_inv(UvdPath(S19_WORD)) == figure_path()


def test_psi_bijective_small():
    for n in range(0, 5):
        domain = enumerate_lf(n)
        images = [psi(q) for q in domain]
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_uvd(n + 1))
        for q, s in zip(domain, images):
            assert vox_word(s.word) == q.height
            assert psi_inv(s) == q


def test_psi_inv_round_trip_over_paths():
    for n in range(1, 6):
        for s in enumerate_uvd(n):
            assert psi(psi_inv(s)) == s


def test_schroeder_to_is():
    assert schroeder_to_is(SchroederPath("NH")).entries == (0,)
    for n in range(1, 5):
        domain = enumerate_schroeder(n)
        images = [schroeder_to_is(p) for p in domain]
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_is(n, ["102"]))
        for p, e in zip(domain, images):
            assert is_to_schroeder(e) == p


def test_tiling_examples():
    cases = {
        (0, 0, 0): "DD",
        (0, 0, 1): "DSS",
        (0, 1, 1): "SSSS",
        (0, 1, 0): "SSD",
        (0, 0, 2): "SDS",
    }
    for entries, word in cases.items():
        assert is_to_tiling(InversionSequence(entries)).word == word
        assert tiling_to_is(word, 3).entries == entries


def test_tiling_round_trip_and_lengths():
    for n in range(1, 7):
        domain = enumerate_is(n, ["102", "012"])
        images = [is_to_tiling(e) for e in domain]
        assert len(set(images)) == len(images)
        for e, t in zip(domain, images):
            assert t.board_length == 2 * n - 2
            assert tiling_to_is(t, n) == e
            assert tiling_to_is(t) == e  # n can be derived


def test_tiling_errors():
    with pytest.raises(PatternViolation):
        is_to_tiling(InversionSequence((0, 1, 2)))  # contains 012
    with pytest.raises(BadBoardLength):
        tiling_to_is("S", None)  # odd board
    with pytest.raises(BadBoardLength):
        tiling_to_is("DD", 4)  # wrong length for n
    with pytest.raises(BadBoardLength):
        tiling_to_is("SDD", None)  # unpaired square
    with pytest.raises(ValueError):
        Tiling("SX")


def test_tiling_rank_initial_segment():
    # rank-t images with t < n-2 start with D^i S^(2t-2i+2) D or D^i S^(2t-2i+1) D
    for n in range(3, 7):
        for e in enumerate_is(n, ["102", "012"]):
            t = stats(e).rank
            if t >= n - 2:
                continue
            word = is_to_tiling(e).word
            assert any(
                word.startswith("D" * i + "S" * squares + "D")
                for i in range(t + 1)
                for squares in (2 * t - 2 * i + 2, 2 * t - 2 * i + 1)
            ), (e, word)

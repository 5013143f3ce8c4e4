import pytest

from semitrio.cstack import BOTTOM, TOP, ReadTransition, Rncsa, WriteTransition, divisibility_witness, simulate_rncsa
from semitrio.errors import AlphabetError, SemitrioError

W = divisibility_witness()


@pytest.mark.parametrize("word,expected", [
    ("ab", True), ("aabbbb", True), ("aaabbbbbb", True), ("abbbbb", True),
    ("aabbb", False), ("a", False), ("b", False), ("ba", False), ("", False), ("abab", False),
])
def test_witness_examples(word, expected):
    assert simulate_rncsa(W, word) is expected


def test_witness_grid_small():
    for i in range(1, 7):
        for j in range(0, 37):
            assert simulate_rncsa(W, "a" * i + "b" * j) == (j > 0 and j % i == 0), (i, j)


def test_rejects_letters_outside_alphabet():
    with pytest.raises(AlphabetError):
        simulate_rncsa(W, "abc")


def _machine(**changes):
    fields = dict(
        states={"w"}, read_states={"r"}, alphabet=("a",), stack_alphabet=("x",), counters=0, reversals=0,
        write_transitions={WriteTransition("w", "a", (), "w", ("x",), ())},
        read_transitions={ReadTransition("r", TOP, (), "r", -1, ())},
        switches={("w", "r")}, initial="w", finals={"r"},
    )
    fields.update(changes)
    return Rncsa(**fields)


def test_switch_only_at_end_of_input():
    # the read phase accepts at once, so acceptance only depends on reaching the switch
    M = _machine()
    assert simulate_rncsa(M, "") and simulate_rncsa(M, "aaa")
    stuck = _machine(switches=set())
    assert not simulate_rncsa(stuck, "a")


def test_read_phase_sees_written_stack():
    # accept only if the cell below the top marker holds x, i.e. something was written
    M = _machine(
        read_states={"r", "look", "yes"},
        read_transitions={ReadTransition("r", TOP, (), "look", -1, ()), ReadTransition("look", "x", (), "yes", 0, ())},
        finals={"yes"},
    )
    assert simulate_rncsa(M, "a") and not simulate_rncsa(M, "")


def test_head_cannot_leave_the_markers():
    M = _machine(
        read_states={"r", "yes"},
        read_transitions={ReadTransition("r", TOP, (), "r", 1, ()), ReadTransition("r", BOTTOM, (), "yes", 0, ())},
        finals={"yes"},
    )
    assert not simulate_rncsa(M, "aa")


@pytest.mark.parametrize("changes", [
    {"read_states": {"w"}},
    {"stack_alphabet": ("<",)},
    {"initial": "r"},
    {"switches": {("r", "w")}},
    {"read_transitions": {ReadTransition("r", TOP, (), "r", 2, ())}},
    {"write_transitions": {WriteTransition("w", "a", (), "r", (), ())}},
    {"write_transitions": {WriteTransition("w", "a", (), "w", ("y",), ())}},
    {"read_transitions": {ReadTransition("r", "y", (), "r", 0, ())}},
])
def test_validation(changes):
    with pytest.raises(SemitrioError):
        _machine(**changes)

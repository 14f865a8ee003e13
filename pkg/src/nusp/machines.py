"""Sample machines used by the tests, the gallery and the shipped data files."""

from __future__ import annotations

from .turing import TuringMachine


def even_as() -> TuringMachine:
    """Words over {a, b} with an even number of a's."""
    delta = [
        ("even", "a", "odd", "a", "R"),
        ("even", "b", "even", "b", "R"),
        ("odd", "a", "even", "a", "R"),
        ("odd", "b", "odd", "b", "R"),
        ("even", "B", "acc", "B", "R"),
    ]
    return TuringMachine({"even", "odd", "acc"}, {"a", "b"}, {"a", "b", "B"}, "B", delta, "even", {"acc"},
                         name="even-as")


def anbn() -> TuringMachine:
    """{a^n b^n : n >= 1}: cross off one a and one b per sweep."""
    delta = [
        ("q0", "a", "q1", "X", "R"),
        ("q1", "a", "q1", "a", "R"),
        ("q1", "Y", "q1", "Y", "R"),
        ("q1", "b", "q2", "Y", "L"),
        ("q2", "a", "q2", "a", "L"),
        ("q2", "Y", "q2", "Y", "L"),
        ("q2", "X", "q0", "X", "R"),
        ("q0", "Y", "q3", "Y", "R"),
        ("q3", "Y", "q3", "Y", "R"),
        ("q3", "B", "acc", "B", "R"),
    ]
    return TuringMachine({"q0", "q1", "q2", "q3", "acc"}, {"a", "b"}, {"a", "b", "X", "Y", "B"}, "B", delta,
                         "q0", {"acc"}, name="anbn")


def palindromes() -> TuringMachine:
    """Palindromes over {a, b}.

    The machine erases matching outer symbols pairwise.  On an unmarked
    symbol it may instead guess that this is the middle of an odd-length
    palindrome and accept if the next cell is already marked or blank.
    """
    delta = [
        ("q0", "a", "ra", "X", "R"),
        ("q0", "b", "rb", "X", "R"),
        ("q0", "a", "mid", "X", "R"),
        ("q0", "b", "mid", "X", "R"),
        ("q0", "X", "acc", "X", "R"),
        ("q0", "B", "acc", "B", "R"),
        ("mid", "X", "acc", "X", "R"),
        ("mid", "B", "acc", "B", "R"),
        ("ra", "a", "ra", "a", "R"),
        ("ra", "b", "ra", "b", "R"),
        ("ra", "X", "ca", "X", "L"),
        ("ra", "B", "ca", "B", "L"),
        ("rb", "a", "rb", "a", "R"),
        ("rb", "b", "rb", "b", "R"),
        ("rb", "X", "cb", "X", "L"),
        ("rb", "B", "cb", "B", "L"),
        ("ca", "a", "back", "X", "L"),
        ("cb", "b", "back", "X", "L"),
        ("back", "a", "back", "a", "L"),
        ("back", "b", "back", "b", "L"),
        ("back", "X", "q0", "X", "R"),
    ]
    states = {"q0", "ra", "rb", "ca", "cb", "back", "mid", "acc"}
    return TuringMachine(states, {"a", "b"}, {"a", "b", "X", "B"}, "B", delta, "q0", {"acc"},
                         name="palindromes")


SAMPLES = {"even-as": even_as, "anbn": anbn, "palindromes": palindromes}


def is_palindrome(w) -> bool:
    return tuple(w) == tuple(reversed(w))


def has_even_as(w) -> bool:
    return list(w).count("a") % 2 == 0


def is_anbn(w) -> bool:
    n = len(w) // 2
    return n >= 1 and len(w) == 2 * n and tuple(w) == ("a",) * n + ("b",) * n

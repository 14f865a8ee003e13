import pytest
from hypothesis import given
from hypothesis import strategies as st

from nusp.filters import STRONG, WEAK, Filter, filter_set, passes

from .conftest import w, words, ws

symbol_sets = st.frozensets(st.sampled_from("abcd"), max_size=3)


def F(permit, forbid, mode):
    return Filter(set(permit), set(forbid), mode)


@pytest.mark.parametrize("z, f, expected", [
    ("abc", F("ab", "d", STRONG), True),
    ("ac", F("ab", "d", STRONG), False),
    ("ac", F("ab", "d", WEAK), True),
    ("~", F("", "d", STRONG), True),
    ("~", F("", "d", WEAK), False),
])
def test_passes_examples(z, f, expected):
    assert passes(w(z), f) is expected


@pytest.mark.parametrize("mode, expected", [(STRONG, ws("abc")), (WEAK, ws("abc", "ac"))])
def test_filter_set_examples(mode, expected):
    assert filter_set(ws("abc", "ac", "ad"), F("ab", "d", mode)) == expected


def test_filter_set_of_empty_language():
    assert filter_set(set(), F("a", "b", STRONG)) == set()


def test_bad_mode_rejected():
    with pytest.raises(ValueError):
        Filter({"a"}, set(), "x")


def test_warnings_for_empty_sets():
    assert Filter(set(), {"a"}, WEAK).warnings() == ["empty permitting set (weak filter rejects every word)"]
    assert Filter({"a"}, set(), STRONG).warnings() == ["empty forbidding set"]
    assert Filter({"a"}, {"b"}).warnings() == []


def test_overlap_is_reported_not_raised():
    assert Filter({"a", "b"}, {"b"}).overlap() == {"b"}


@given(words, symbol_sets, symbol_sets)
def test_strong_implies_weak(z, P, Fb):
    P = P - Fb
    if P and passes(z, Filter(P, Fb, STRONG)):
        assert passes(z, Filter(P, Fb, WEAK))


@given(st.sets(words, max_size=5), symbol_sets, symbol_sets, st.sampled_from([STRONG, WEAK]))
def test_filter_set_is_subset_and_idempotent(L, P, Fb, mode):
    f = Filter(P - Fb, Fb, mode)
    once = filter_set(L, f)
    assert once <= L
    assert filter_set(once, f) == once


@given(words, symbol_sets, symbol_sets, st.sampled_from([STRONG, WEAK]))
def test_forbidden_symbol_dominates(z, P, Fb, mode):
    if set(z) & Fb:
        assert not passes(z, Filter(P - Fb, Fb, mode))

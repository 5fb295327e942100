from __future__ import annotations

import random

from superpatterns import (
    ContainmentAutomaton,
    Word,
    get_automaton,
    is_superpattern,
    missing_patterns,
)

from conftest import all_words


def test_agrees_with_backtracking_route_ternary():
    auto = ContainmentAutomaton(3, 3)
    for n in range(0, 7):
        for w in all_words(3, n):
            assert auto.accepting[auto.scan(w.letters)] == is_superpattern(w, 3)


def test_agrees_with_backtracking_route_binary():
    auto = ContainmentAutomaton(2, 2)
    for n in range(0, 9):
        for w in all_words(2, n):
            assert auto.accepting[auto.scan(w.letters)] == is_superpattern(w, 2)


def test_missing_patterns_agree():
    auto = get_automaton(3, 3)
    rng = random.Random(11)
    for _ in range(200):
        letters = tuple(rng.randrange(1, 4) for _ in range(rng.randrange(0, 10)))
        w = Word.from_letters(letters, 3)
        state = auto.scan(letters)
        from_auto = {str(auto.patterns[i]) for i in auto.missing_pattern_indices(state)}
        assert from_auto == {str(p) for p in missing_patterns(w, 3)}


def test_first_superpattern_time():
    auto = get_automaton(3, 3)
    assert auto.first_superpattern_time((1, 2, 1, 3, 1, 2, 1)) == 7
    assert auto.first_superpattern_time((1, 2, 1, 3, 1, 2)) is None
    # acceptance is absorbing: extending a superpattern keeps the same time
    assert auto.first_superpattern_time((1, 2, 1, 3, 1, 2, 1, 3, 3)) == 7


def test_states_are_shared_and_bounded():
    auto = get_automaton(3, 3)
    before = auto.state_count
    for w in all_words(3, 5):
        auto.scan(w.letters)
    # revisiting the same prefixes must not mint new states
    for w in all_words(3, 5):
        auto.scan(w.letters)
    assert auto.state_count >= before
    assert auto.state_count < 5000


def test_shared_instance_reuse():
    assert get_automaton(2, 2) is get_automaton(2, 2)

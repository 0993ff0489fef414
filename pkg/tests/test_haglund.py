from itertools import product

import pytest

from energystats.combinat import enumerate_paths, partitions
from energystats.haglund import (
    des,
    des_path_language,
    des_path_language_total,
    inv_abs,
    inv_abs_path_language,
    inv_maj,
    inv_mu,
    inv_path_language,
    is_highest_weight,
    maj_mu,
    path_to_tabloid,
    tabloid_to_path,
)
from energystats.path_stats import maj_word


def compositions_of(n, max_parts=4):
    for k in range(1, max_parts + 1):
        for c in product(range(1, n + 1), repeat=k):
            if sum(c) == n:
                yield c


class TestTabloid:
    def test_reading_example(self):
        t = path_to_tabloid("abcdefgh", (3, 2, 3))
        assert t == (("c", "b", "a"), ("e", "d"), ("h", "g", "f"))
        assert "".join(tabloid_to_path(t)) == "abcdefgh"

    def test_small(self):
        assert path_to_tabloid((1, 2), (2,)) == ((2, 1),)
        assert path_to_tabloid((1, 2), (1, 1)) == ((1,), (2,))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            path_to_tabloid((1, 2, 3), (2,))


class TestInvDes:
    def test_inv_abs(self):
        assert inv_abs(((2, 1),)) == 1
        assert inv_abs(((1, 2),)) == 0
        assert inv_abs(((3, 3), (3,))) == 0

    def test_des(self):
        assert des(((2, 1, 3),)) == 0
        assert des(((1,), (2,))) == 0
        assert des(((2, 1), (4, 3))) == 1

    def test_small_statistics(self):
        assert inv_maj((1, 2), (2,)) == (1, 0)
        assert inv_maj((2, 1), (2,)) == (0, 0)
        assert inv_maj((1, 2), (1, 1)) == (0, 1)
        assert inv_maj((2, 1), (1, 1)) == (0, 0)
        assert inv_maj((2, 2, 2), (2, 1)) == (0, 0)

    def test_inv_mu_nonnegative(self):
        for n in range(1, 7):
            for mu in partitions(n):
                for alpha in partitions(n):
                    for p in enumerate_paths(alpha):
                        assert inv_mu(p, mu) >= 0

    def test_single_column_maj_is_path_maj(self):
        for w in product(range(1, 4), repeat=5):
            assert maj_mu(w, (1,) * 5) == maj_word(w, 3)


class TestPathLanguage:
    def test_empty_second_row(self):
        assert inv_path_language((1, 2, 2), ()) == inv_abs(path_to_tabloid((1, 2, 2), (3,)))
        assert des_path_language((1, 2), ()) == 0

    def test_constant(self):
        assert inv_path_language((2, 2), (2, 2)) == 0
        assert des_path_language((2, 2), (2, 2)) == 0

    def test_equal_rows(self):
        a1, a2 = (1, 2), (1, 2)
        t = path_to_tabloid(a1 + a2, (2, 2))
        # last row against an empty row holds its own within-row pairs
        assert inv_path_language(a1, a2) + inv_path_language(a2, ()) == inv_abs(t)
        assert des_path_language(a1, a2) == des(t)

    def test_agrees_with_tabloids(self):
        for L in range(1, 8):
            for n in range(1, 5):
                if n ** L > 3000:
                    continue
                words = list(product(range(1, n + 1), repeat=L))
                for mu in partitions(L):
                    for w in words:
                        t = path_to_tabloid(w, mu)
                        assert inv_abs_path_language(w, mu) == inv_abs(t)
                        assert des_path_language_total(w, mu) == des(t)

    def test_length_eight(self):
        for w in product(range(1, 3), repeat=8):
            for mu in [(4, 4), (5, 3), (3, 3, 2), (2, 2, 2, 2), (6, 1, 1)]:
                t = path_to_tabloid(w, mu)
                assert inv_abs_path_language(w, mu) == inv_abs(t)
                assert des_path_language_total(w, mu) == des(t)


class TestHighestWeight:
    @pytest.mark.parametrize(
        "word,expected",
        [("111123", True), ("211113", False), ("123111", True), ("1", True), ("2", False), ("1212", True), ("1221", False)],
    )
    def test_ballot(self, word, expected):
        assert is_highest_weight(tuple(int(c) for c in word)) is expected

    def test_count_is_kostka_like(self):
        # highest-weight paths of weight lam are counted by SYT(lam)
        from energystats.combinat import hook_length_count

        for n in range(1, 7):
            for lam in partitions(n):
                hw = [p for p in enumerate_paths(lam) if is_highest_weight(p)]
                assert len(hw) == hook_length_count(lam)


def test_round_trip_on_compositions():
    w = (3, 1, 2, 2, 1, 3)
    for mu in compositions_of(6, 3):
        t = path_to_tabloid(w, mu)
        assert tuple(len(row) for row in t) == mu
        assert tabloid_to_path(t) == w

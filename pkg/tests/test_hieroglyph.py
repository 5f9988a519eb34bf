# -*- coding: utf-8 -*-
'''
Test parsing, canonical forms and interlacement of hieroglyphs
'''

from string import ascii_lowercase

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import mobiuscheck.errors as errors
import mobiuscheck.gf2 as gf2
import mobiuscheck.hieroglyph as hieroglyph


def words(max_n=8):
    return st.integers(0, max_n).flatmap(
        lambda n: st.permutations(list(ascii_lowercase[:n]) * 2)
    ).map(lambda w: hieroglyph.Hieroglyph(tuple(w)))


class TestParseWord():
    def test_single_characters(self):
        h = hieroglyph.parse_word('abab')
        assert h.word == ('a', 'b', 'a', 'b')
        assert h.n == 2
        assert h.letters == ('a', 'b')
        assert h.positions == {'a': (0, 2), 'b': (1, 3)}

    def test_letters_in_first_occurrence_order(self):
        assert hieroglyph.parse_word('bccaab').letters == ('b', 'c', 'a')

    def test_whitespace_separated_tokens(self):
        h = hieroglyph.parse_word('x1 x2 x1 x2')
        assert h.letters == ('x1', 'x2')
        assert str(h) == 'x1 x2 x1 x2'

    def test_comma_separated_tokens(self):
        h = hieroglyph.parse_word('x1, x2,x1 , x2')
        assert h.word == ('x1', 'x2', 'x1', 'x2')

    def test_empty_token(self):
        with pytest.raises(errors.EmptyToken):
            hieroglyph.parse_word('a,,a')

    def test_empty_word(self):
        h = hieroglyph.parse_word('')
        assert h.n == 0
        assert str(h) == ''

    def test_odd_length(self):
        with pytest.raises(errors.OddLength):
            hieroglyph.parse_word('abc')

    def test_letter_once(self):
        with pytest.raises(errors.NotDoubleOccurrence) as e:
            hieroglyph.parse_word('abca')
        assert e.value.details['letters'] == ['b', 'c']

    def test_letter_three_times(self):
        with pytest.raises(errors.NotDoubleOccurrence):
            hieroglyph.parse_word('aaab')

    def test_errors_are_input_errors(self):
        with pytest.raises(errors.InputError):
            hieroglyph.parse_word('a')


class TestInterlaces():
    def test_interlacing(self):
        h = hieroglyph.parse_word('abab')
        assert hieroglyph.interlaces(h, 'a', 'b')
        assert hieroglyph.interlaces(h, 'b', 'a')

    def test_not_interlacing(self):
        h = hieroglyph.parse_word('aabb')
        assert not hieroglyph.interlaces(h, 'a', 'b')

    def test_nested(self):
        assert not hieroglyph.interlaces(hieroglyph.parse_word('abba'), 'a', 'b')

    def test_same_letter(self):
        with pytest.raises(errors.SameLetter):
            hieroglyph.interlaces(hieroglyph.parse_word('abab'), 'a', 'a')

    def test_unknown_letter(self):
        with pytest.raises(errors.UnknownLetter):
            hieroglyph.interlaces(hieroglyph.parse_word('abab'), 'a', 'z')

    def test_rows(self):
        h = hieroglyph.parse_word('abcacb')
        assert h.interlacement_rows() == (0b110, 0b001, 0b001)

    def test_matrix_of_forbidden_triple(self):
        h = hieroglyph.parse_word('abcacb')
        assert hieroglyph.interlacement_matrix(h) == gf2.P_PATTERN

    def test_matrix_of_forbidden_quadruple(self):
        h = hieroglyph.parse_word('ababcdcd')
        assert hieroglyph.interlacement_matrix(h) == gf2.Q_PATTERN

    @given(words())
    def test_rows_agree_with_pairwise_check(self, h):
        rows = h.interlacement_rows()
        for i, a in enumerate(h.letters):
            for j, b in enumerate(h.letters):
                if i != j:
                    assert bool((rows[i] >> j) & 1) == hieroglyph.interlaces(h, a, b)

    @given(words(), st.integers(1, 5))
    def test_degrees_agree_with_rows(self, h, chunk_rows):
        degrees = hieroglyph.interlacement_degrees(h, chunk_rows)
        expected = [bin(row).count('1') for row in h.interlacement_rows()]
        assert degrees.tolist() == expected
        assert degrees.dtype == np.int64


class TestCanonicalForm():
    def test_rotation(self):
        assert (hieroglyph.canonical_form(hieroglyph.parse_word('aabb')) ==
                hieroglyph.canonical_form(hieroglyph.parse_word('abba')))

    def test_forbidden_triple_spellings(self):
        keys = {
            hieroglyph.canonical_form(hieroglyph.parse_word(w))
            for w in ('abacbc', 'badbda', 'abcacb')
        }
        assert len(keys) == 1

    def test_distinguishes_crossing(self):
        assert (hieroglyph.canonical_form(hieroglyph.parse_word('abab')) !=
                hieroglyph.canonical_form(hieroglyph.parse_word('aabb')))

    def test_serializes_as_word(self):
        key = hieroglyph.canonical_form(hieroglyph.parse_word('cdcd'))
        assert str(key) == 'abab'
        assert key.to_hieroglyph() == hieroglyph.parse_word('abab')

    def test_empty(self):
        key = hieroglyph.canonical_form(hieroglyph.parse_word(''))
        assert key.word == ()
        assert str(key) == ''

    def test_long_alphabet(self):
        tokens = ['x{}'.format(i) for i in range(27)]
        h = hieroglyph.Hieroglyph(tuple(tokens + tokens))
        key = hieroglyph.canonical_form(h)
        assert key.n == 27
        assert key.tokens()[:2] == ('x0', 'x1')

    @given(words(), st.integers(0, 20), st.booleans(), st.randoms())
    def test_invariant_under_symmetries(self, h, shift, reflect, rnd):
        other = h.rotated(shift)
        if reflect:
            other = other.reflected()
        letters = list(h.letters)
        renamed = list(letters)
        rnd.shuffle(renamed)
        other = other.relabeled(dict(zip(letters, renamed)))
        assert hieroglyph.canonical_form(other) == hieroglyph.canonical_form(h)


class TestDeleteLetters():
    def test_delete(self):
        h = hieroglyph.parse_word('aabcbc')
        assert str(hieroglyph.delete_letters(h, {'a'})) == 'bcbc'

    def test_keep(self):
        h = hieroglyph.parse_word('abcadbcd')
        assert str(hieroglyph.keep_letters(h, ['a', 'b'])) == 'abab'

    def test_unknown_letter(self):
        with pytest.raises(errors.UnknownLetter):
            hieroglyph.delete_letters(hieroglyph.parse_word('aa'), {'b'})

    @settings(max_examples=50)
    @given(words(), st.data())
    def test_commutes_with_submatrix(self, h, data):
        removed = data.draw(st.sets(st.sampled_from(h.letters))) if h.letters else set()
        kept = [i for i, letter in enumerate(h.letters) if letter not in removed]
        smaller = hieroglyph.delete_letters(h, removed)
        assert (hieroglyph.interlacement_matrix(smaller) ==
                hieroglyph.interlacement_matrix(h).submatrix(kept))


class TestCliqueWord():
    def test_three(self):
        assert str(hieroglyph.clique_word(3)) == 'abcabc'

    def test_zero(self):
        assert hieroglyph.clique_word(0).n == 0

    def test_token_names(self):
        assert hieroglyph.enumeration_token(2, 5) == 'c'
        assert hieroglyph.enumeration_token(27, 30) == 'x27'

# -*- coding: utf-8 -*-
'''
Test generation of hieroglyphs, equivalence classes and the census
'''

import pytest

import mobiuscheck.enumeration as enumeration
import mobiuscheck.errors as errors
from mobiuscheck.config import config


class TestEnumerateWords():
    def test_one(self):
        assert [str(h) for h in enumeration.enumerate_words(1)] == ['aa']

    def test_two(self):
        assert {str(h) for h in enumeration.enumerate_words(2)} == {'aabb', 'abab', 'abba'}

    def test_zero(self):
        assert [h.n for h in enumeration.enumerate_words(0)] == [0]

    @pytest.mark.parametrize('n', range(1, 6))
    def test_counts(self, n):
        words = [h.word for h in enumeration.enumerate_words(n)]
        assert len(words) == len(set(words)) == enumeration.double_factorial(n)

    def test_double_factorial(self):
        assert [enumeration.double_factorial(n) for n in range(6)] == [1, 1, 3, 15, 105, 945]

    def test_bound(self):
        with pytest.raises(errors.BoundExceeded) as e:
            enumeration.enumerate_words(config['ENUMERATE_MAX_N'] + 1)
        assert e.value.exit_code == 2


class TestEnumerateClasses():
    def test_two(self):
        assert [str(key) for key in enumeration.enumerate_classes(2)] == ['aabb', 'abab']

    @pytest.mark.parametrize('n, classes', [(0, 1), (1, 1), (2, 2), (3, 5), (4, 17), (5, 79)])
    def test_counts(self, n, classes):
        assert len(enumeration.enumerate_classes(n)) == classes

    def test_sorted(self):
        keys = enumeration.enumerate_classes(4)
        assert keys == sorted(keys)

    def test_bound(self):
        with pytest.raises(errors.BoundExceeded):
            enumeration.enumerate_classes(config['CLASSES_MAX_N'] + 1)


class TestCensus():
    def test_one(self):
        assert enumeration.census(1) == enumeration.Census(1, 1, 1, 1)

    def test_two(self):
        assert enumeration.census(2) == enumeration.Census(2, 3, 2, 2)

    def test_three(self):
        census = enumeration.census(3, include_classes=True)
        assert (census.classes, census.realizable_classes) == (5, 4)
        assert {'word': 'abacbc', 'realizable': False} in census.per_class

    def test_as_dict(self):
        assert enumeration.census(1).as_dict() == {
            'n': 1, 'total_matchings': 1, 'classes': 1, 'realizable_classes': 1,
        }

    def test_as_table(self):
        assert enumeration.census(2).as_table() == (
            'n\ttotal_matchings\tclasses\trealizable_classes\n2\t3\t2\t2\n'
        )

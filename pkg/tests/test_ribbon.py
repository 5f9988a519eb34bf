# -*- coding: utf-8 -*-
'''
Test ribbon disks: crossing matrices, the twisting oracle and surface invariants
'''

from itertools import product

import pytest

import mobiuscheck.enumeration as enumeration
import mobiuscheck.errors as errors
import mobiuscheck.gf2 as gf2
import mobiuscheck.hieroglyph as hieroglyph
import mobiuscheck.mobius as mobius
import mobiuscheck.ribbon as ribbon


def disk(word, twists):
    h = hieroglyph.parse_word(word)
    return ribbon.RibbonDisk(h, ribbon.parse_twists(twists, h.n))


class TestRibbonDisk():
    def test_wrong_length(self):
        with pytest.raises(errors.MalformedTwists):
            ribbon.RibbonDisk(hieroglyph.parse_word('abab'), (1,))

    def test_bad_bit(self):
        with pytest.raises(errors.MalformedTwists):
            ribbon.RibbonDisk(hieroglyph.parse_word('aa'), (2,))

    def test_untwisted(self):
        assert ribbon.RibbonDisk.untwisted(hieroglyph.parse_word('abab')).twists == (0, 0)

    def test_parse_twists(self):
        assert ribbon.parse_twists(' 101 ', 3) == (1, 0, 1)
        assert ribbon.format_twists((1, 0, 1)) == '101'

    @pytest.mark.parametrize('text', ['10', '1021', '1 0 1'])
    def test_parse_twists_malformed(self, text):
        with pytest.raises(errors.MalformedTwists):
            ribbon.parse_twists(text, 3)


class TestCrossingMatrix():
    def test_forbidden_triple(self):
        m = ribbon.crossing_matrix(disk('abcacb', '101'))
        assert m == gf2.P_PATTERN.with_diagonal((1, 0, 1))

    def test_single(self):
        assert ribbon.crossing_matrix(disk('aa', '0')).to_lists() == [[0]]

    def test_twisted_pair(self):
        assert ribbon.crossing_matrix(disk('abab', '11')).to_lists() == [[1, 1], [1, 1]]

    def test_min_bands(self):
        assert ribbon.min_mobius_bands(disk('aa', '1')) == 1
        assert ribbon.min_mobius_bands(disk('abab', '11')) == 1
        assert ribbon.min_mobius_bands(disk('abab', '00')) == 2


class TestOracle():
    def test_pair(self):
        assert ribbon.oracle_weak_realizability(hieroglyph.parse_word('abab')) == (True, (1, 1))

    def test_forbidden(self):
        assert ribbon.oracle_weak_realizability(hieroglyph.parse_word('abcacb')) == (False, None)

    def test_isolated(self):
        assert ribbon.oracle_weak_realizability(hieroglyph.parse_word('aabb')) == (True, (0, 0))

    def test_empty(self):
        assert ribbon.oracle_weak_realizability(hieroglyph.parse_word('')) == (True, ())

    def test_least_twisting(self):
        result = ribbon.oracle_weak_realizability(hieroglyph.parse_word('aabcbc'))
        assert result.twists == (0, 1, 1)

    def test_too_large(self):
        with pytest.raises(errors.DimensionTooLarge):
            ribbon.oracle_weak_realizability(hieroglyph.clique_word(21))

    def test_agrees_with_check(self):
        for n in range(5):
            for h in enumeration.enumerate_words(n):
                assert (ribbon.oracle_weak_realizability(h).realizable ==
                        mobius.is_weakly_realizable(h))


class TestRealizableOnBands():
    def test_two_bands(self):
        assert ribbon.realizable_on_m_bands(hieroglyph.parse_word('abcacb'), 2)

    def test_one_band(self):
        assert not ribbon.realizable_on_m_bands(hieroglyph.parse_word('abcacb'), 1)

    def test_no_bands(self):
        assert ribbon.realizable_on_m_bands(hieroglyph.parse_word('aabb'), 0)
        assert not ribbon.realizable_on_m_bands(hieroglyph.parse_word('abab'), 0)

    def test_negative(self):
        with pytest.raises(errors.InputError):
            ribbon.realizable_on_m_bands(hieroglyph.parse_word('aa'), -1)


class TestSurfaceSummary():
    def test_annulus(self):
        summary = ribbon.surface_summary(disk('aa', '0'))
        assert summary == ribbon.SurfaceSummary(0, 2, True)
        assert summary.genus == 0

    def test_moebius_band(self):
        summary = ribbon.surface_summary(disk('aa', '1'))
        assert summary == ribbon.SurfaceSummary(0, 1, False)
        assert summary.genus == 1

    def test_punctured_torus(self):
        summary = ribbon.surface_summary(disk('abab', '00'))
        assert summary == ribbon.SurfaceSummary(-1, 1, True)
        assert summary.as_dict() == {
            'euler_characteristic': -1,
            'boundary_components': 1,
            'orientable': True,
            'genus': 1,
        }

    def test_disk(self):
        summary = ribbon.surface_summary(ribbon.RibbonDisk.untwisted(hieroglyph.parse_word('')))
        assert summary == ribbon.SurfaceSummary(1, 1, True)
        assert summary.genus == 0

    def test_equal_matrices_equal_surfaces(self):
        # nested and parallel chords have the same zero crossing matrix
        assert (ribbon.surface_summary(disk('aabbcc', '010')) ==
                ribbon.surface_summary(disk('abbacc', '010')))

    def test_boundary_count_from_rank(self):
        for n in range(4):
            for h in enumeration.enumerate_words(n):
                for twists in product((0, 1), repeat=n):
                    d = ribbon.RibbonDisk(h, twists)
                    summary = ribbon.surface_summary(d)
                    assert summary.boundary_components == n + 1 - ribbon.min_mobius_bands(d)

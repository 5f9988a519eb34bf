# -*- coding: utf-8 -*-
'''
Test the SVG picture of a ribbon disk
'''

import pytest

import mobiuscheck.errors as errors
import mobiuscheck.hieroglyph as hieroglyph
import mobiuscheck.render as render


def render_text(tmp_path, word, twists=None):
    path = render.render(hieroglyph.parse_word(word), twists, tmp_path / 'out.svg')
    with open(path, encoding='utf-8') as f:
        return f.read()


class TestRender():
    def test_arcs_and_labels(self, tmp_path):
        svg = render_text(tmp_path, 'ababcdcd')
        assert svg.count('id="arc-') == 8
        assert 'id="arc-7"' in svg
        assert svg.count('id="ribbon-') == 4
        assert '-twisted' not in svg
        for letter in 'abcd':
            assert '>{}<'.format(letter) in svg

    def test_bare_circle(self, tmp_path):
        svg = render_text(tmp_path, '')
        assert 'id="boundary"' in svg
        assert 'id="arc-' not in svg

    def test_twisted_ribbon(self, tmp_path):
        svg = render_text(tmp_path, 'aa', (1,))
        assert 'id="ribbon-a-twisted"' in svg

    def test_deterministic(self, tmp_path):
        first = render_text(tmp_path, 'abcacb', (1, 0, 1))
        second = render_text(tmp_path, 'abcacb', (1, 0, 1))
        assert first == second

    def test_wrong_twists(self):
        with pytest.raises(errors.MalformedTwists):
            render.draw(hieroglyph.parse_word('abab'), (1,))

    def test_unwritable(self, tmp_path):
        with pytest.raises(errors.IoError):
            render.render(hieroglyph.parse_word('aa'), None, tmp_path / 'missing' / 'out.svg')

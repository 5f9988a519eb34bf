# -*- coding: utf-8 -*-
"""SVG pictures of ribbon disks: the boundary circle, one labeled attachment
arc per letter occurrence and one ribbon per letter.

Twisted ribbons have crossing sides and are hatched. Output is byte-stable for
a fixed input: the SVG hash salt is pinned and no date is written.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Arc, Circle, PathPatch  # noqa: E402
from matplotlib.path import Path  # noqa: E402

from .config import config  # noqa: E402
from .errors import IoError  # noqa: E402
from .hieroglyph import Hieroglyph  # noqa: E402
from .ribbon import RibbonDisk  # noqa: E402

logger = logging.getLogger(__name__)

ARC_FRACTION = 0.6
LABEL_RADIUS = 1.14
UNTWISTED_COLOUR = "tab:blue"
TWISTED_COLOUR = "tab:red"


def _angle(position: float, length: int) -> float:
    # clockwise from the top
    return np.pi / 2 - 2 * np.pi * (position + 0.5) / length


def _point(angle: float, radius: float = 1.0):
    return radius * np.cos(angle), radius * np.sin(angle)


def _arc_ends(position: int, length: int):
    """Left and right endpoints of an attachment arc, in clockwise order."""
    half = np.pi * ARC_FRACTION / length
    centre = _angle(position, length)
    return centre + half, centre - half


def _ribbon_path(start_left, start_right, end_left, end_right, twisted: bool) -> Path:
    """Closed outline of a ribbon made of two quadratic Bezier sides."""
    if twisted:
        first, second = (start_left, end_left), (end_right, start_right)
    else:
        first, second = (start_left, end_right), (end_left, start_right)
    vertices, codes = [], []
    for k, (a, b) in enumerate((first, second)):
        p, q = _point(a), _point(b)
        control = ((p[0] + q[0]) * 0.25, (p[1] + q[1]) * 0.25)
        if k == 0:
            vertices.append(p)
            codes.append(Path.MOVETO)
        else:
            vertices.append(p)
            codes.append(Path.LINETO)
        vertices.extend([control, q])
        codes.extend([Path.CURVE3, Path.CURVE3])
    vertices.append(vertices[0])
    codes.append(Path.CLOSEPOLY)
    return Path(vertices, codes)


def draw(hieroglyph: Hieroglyph, twists: Optional[Sequence[int]] = None) -> Figure:
    disk = RibbonDisk(hieroglyph, tuple(twists) if twists is not None else (0,) * hieroglyph.n)
    length = len(hieroglyph.word)
    size = config.get("SVG_SIZE")

    fig = Figure(figsize=(size, size))
    ax = fig.add_axes([0, 0, 1, 1])
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")

    boundary = Circle((0, 0), 1.0, fill=False, linewidth=1.0, color="black")
    boundary.set_gid("boundary")
    ax.add_patch(boundary)

    for letter, twisted in zip(hieroglyph.letters, disk.twists):
        p, q = hieroglyph.positions[letter]
        start_left, start_right = _arc_ends(p, length)
        end_left, end_right = _arc_ends(q, length)
        colour = TWISTED_COLOUR if twisted else UNTWISTED_COLOUR
        ribbon = PathPatch(
            _ribbon_path(start_left, start_right, end_left, end_right, bool(twisted)),
            facecolor=colour,
            edgecolor=colour,
            alpha=0.35,
            hatch="xx" if twisted else None,
            linewidth=1.0,
        )
        ribbon.set_gid("ribbon-{}{}".format(letter, "-twisted" if twisted else ""))
        ax.add_patch(ribbon)

    for position, letter in enumerate(hieroglyph.word):
        left, right = _arc_ends(position, length)
        arc = Arc(
            (0, 0),
            2.0,
            2.0,
            theta1=np.degrees(right),
            theta2=np.degrees(left),
            linewidth=4.0,
            color="black",
        )
        arc.set_gid("arc-{}".format(position))
        ax.add_patch(arc)
        x, y = _point(_angle(position, length), LABEL_RADIUS)
        ax.text(x, y, letter, ha="center", va="center", fontsize=12)

    return fig


def render(hieroglyph: Hieroglyph, twists: Optional[Sequence[int]], out) -> str:
    """Write the SVG picture of ``hieroglyph`` to ``out`` and return the path."""
    fig = draw(hieroglyph, twists)
    rc = {"svg.hashsalt": config.get("SVG_HASHSALT"), "svg.fonttype": "none"}
    try:
        with matplotlib.rc_context(rc):
            fig.savefig(out, format="svg", metadata={"Date": None})
    except OSError as e:
        raise IoError("Cannot write {}: {}".format(out, e))
    logger.info("Wrote {} ({} ribbons)".format(out, hieroglyph.n))
    return str(out)

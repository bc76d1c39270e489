"""Figure rendering for banditlab experiment CSVs.

A pure read-only batch tool: it recomputes nothing, renders each reference
figure from the documented CSV schemas, and produces byte-stable PNGs.
"""

from .render import FIGURES, FigureSpec, RenderInputError, render, render_all

__version__ = "0.1.0"

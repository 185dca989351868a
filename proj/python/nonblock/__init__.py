"""Nonblockingness verification for finite automata.

The heavy lifting lives in the compiled _nonblock extension; this package
re-exports its surface and adds a couple of conveniences.
"""

from ._nonblock import *  # noqa: F401,F403
from ._nonblock import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "1.0.0"


def check(components, limits=None):
    """Dispatch on input shape: one DFA, an NFA, or a list of DFAs."""
    from . import _nonblock as _c

    if limits is None:
        limits = _c.SearchLimits()
    if isinstance(components, _c.Dfa):
        return _c.check_dfa_nonblocking(components)
    if isinstance(components, _c.Automaton):
        return _c.check_nfa_nonblocking(components, limits)
    return _c.check_modular_nonblocking(list(components), limits)

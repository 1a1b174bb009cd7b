"""Backend selection for the subset-construction kernel.

The compiled Cython kernel is used when it was built, the automaton fits in
63 states, and the backend is not forced to "pure" (via set_backend() or
the OPAQ_BACKEND environment variable).  The pure-Python kernel is the
reference implementation and handles automata of any size.
"""

import os

from . import _kernel_py
from ._kernel_py import STOP_NONE, STOP_SECRET_ONLY, STOP_MISSES  # noqa: F401

try:
    from . import _subsetc
except ImportError:
    _subsetc = None

_backend = os.environ.get("OPAQ_BACKEND", "auto")


def set_backend(name):
    """Force the kernel backend: "auto", "pure", or "compiled"."""
    global _backend
    if name not in ("auto", "pure", "compiled"):
        raise ValueError("unknown backend %r" % (name,))
    if name == "compiled" and _subsetc is None:
        raise RuntimeError("compiled kernel is not available")
    _backend = name


def get_backend():
    return _backend


def have_compiled():
    return _subsetc is not None


def active_kernel(n_states):
    if _backend == "pure":
        return _kernel_py
    if _subsetc is not None and n_states <= 63:
        return _subsetc
    if _backend == "compiled":
        raise RuntimeError("compiled kernel cannot handle %d states" % n_states)
    return _kernel_py


def explore(nfa, root, include_empty=False, stop_mode=STOP_NONE, m1=0, m2=0,
            want_edges=False):
    """Run the BFS subset construction on an Nfa; see _kernel_py.explore."""
    kern = active_kernel(nfa.num_states)
    return kern.explore(nfa.succ_flat(), nfa.num_states, nfa.num_symbols, root,
                        include_empty=include_empty, stop_mode=stop_mode,
                        m1=m1, m2=m2, want_edges=want_edges)


def word_to(parent, parent_sym, idx):
    """Reconstruct the BFS word (symbol indices) leading to a node."""
    out = []
    while parent[idx] >= 0:
        out.append(parent_sym[idx])
        idx = parent[idx]
    out.reverse()
    return tuple(out)

"""Pure-Python subset-construction kernel.

Same contract as the compiled kernel in ``_subsetc``; estimates are plain
ints, so any number of states is supported.  See ``kernels`` for the
backend-selection logic and the meaning of the stop modes.
"""

STOP_NONE = 0
STOP_SECRET_ONLY = 1   # stop at node E with E & m1 != 0 and E & m2 == 0
STOP_MISSES = 2        # stop at node E with E & m1 == 0 (empty node included)


def _stopped(e, stop_mode, m1, m2):
    if stop_mode == STOP_SECRET_ONLY:
        return e & m1 != 0 and e & m2 == 0
    if stop_mode == STOP_MISSES:
        return e & m1 == 0
    return False


def explore(succ, n_states, n_syms, root, include_empty=False,
            stop_mode=STOP_NONE, m1=0, m2=0, want_edges=False):
    """Breadth-first subset construction from a root estimate.

    succ is the flattened successor table (state-major, one mask per
    (state, symbol)).  Symbols are expanded in index order, so the first
    node satisfying the stop predicate is reached by the shortest,
    lexicographically least word.  Returns (nodes, edges, parent,
    parent_sym, hit) where hit is the index of the stopping node or -1;
    edges is a flattened node-major table of successor node indices
    (-1 = no edge) or None when not requested.
    """
    visited = {root: 0}
    nodes = [root]
    parent = [-1]
    parent_sym = [-1]
    edges = [] if want_edges else None
    if _stopped(root, stop_mode, m1, m2):
        return nodes, edges, parent, parent_sym, 0
    i = 0
    while i < len(nodes):
        cur = nodes[i]
        for a in range(n_syms):
            nxt = 0
            e = cur
            while e:
                q = (e & -e).bit_length() - 1
                e &= e - 1
                nxt |= succ[q * n_syms + a]
            if nxt == 0 and not include_empty:
                if want_edges:
                    edges.append(-1)
                continue
            idx = visited.get(nxt)
            if idx is None:
                idx = len(nodes)
                visited[nxt] = idx
                nodes.append(nxt)
                parent.append(i)
                parent_sym.append(a)
                if _stopped(nxt, stop_mode, m1, m2):
                    return nodes, edges, parent, parent_sym, idx
            if want_edges:
                edges.append(idx)
        i += 1
    return nodes, edges, parent, parent_sym, -1

"""Pure-Python search kernels.

The compiled module ``_ckernels`` implements the same two functions with the
same visiting order, so both backends return identical results and node
counts for identical inputs.
"""


def embed_search(order, nbrs, domains, adj, rank, node_budget):
    """Backtracking embedding of a pattern graph into a host given as bitsets.

    Pattern vertex ``u`` (``0..m-1``) must land in ``domains[u]``; every pattern
    edge must land on a host edge (``adj``). ``order`` fixes the placement
    order. Candidates are forward-checked (every later neighbour keeps a
    nonempty candidate set), degree-pruned, and tried by ascending count of
    free host neighbours, then ``rank``.

    Returns ``(images, nodes, exhausted)`` where ``images[u]`` is the host
    vertex of ``u`` or ``images`` is None. ``node_budget < 0`` means no limit.
    """
    m = len(order)
    if m == 0:
        return [], 0, False
    pos = [0] * m
    for t, u in enumerate(order):
        pos[u] = t
    earlier = [[w for w in nbrs[u] if pos[w] < pos[u]] for u in range(m)]
    later = [[w for w in nbrs[u] if pos[w] > pos[u]] for u in range(m)]
    universe = 0
    for d in domains:
        universe |= d

    image = [-1] * m
    used = 0
    nodes = 0

    def candidates(t):
        u = order[t]
        c = domains[u] & ~used
        for w in earlier[u]:
            c &= adj[image[w]]
            if not c:
                return []
        need = len(later[u])
        scored = []
        while c:
            low = c & -c
            c ^= low
            h = low.bit_length() - 1
            used2 = used | low
            ah = adj[h]
            ok = True
            for v in later[u]:
                cv = domains[v] & ah & ~used2
                if cv:
                    for w in earlier[v]:
                        if pos[w] < t:
                            cv &= adj[image[w]]
                            if not cv:
                                break
                if not cv:
                    ok = False
                    break
            if not ok:
                continue
            score = (ah & universe & ~used2).bit_count()
            if score < need:
                continue
            scored.append((score, rank[h], h))
        scored.sort()
        return [h for _, _, h in scored]

    cands = [None] * m
    idx = [0] * m
    cands[0] = candidates(0)
    t = 0
    while True:
        if idx[t] < len(cands[t]):
            h = cands[t][idx[t]]
            idx[t] += 1
            nodes += 1
            if 0 <= node_budget < nodes:
                return None, nodes - 1, True
            image[order[t]] = h
            used |= 1 << h
            if t + 1 == m:
                return image, nodes, False
            t += 1
            cands[t] = candidates(t)
            idx[t] = 0
        else:
            t -= 1
            if t < 0:
                return None, nodes, False
            used &= ~(1 << image[order[t]])
            image[order[t]] = -1


def regularity_scan(cols, a, b, eps_num, eps_den):
    """Exact search for an irregularity witness of a bipartite pair.

    ``cols[y]`` is the bitmask (over ``0..a-1``) of neighbours of right vertex
    ``y``. For each left subset X with ``|X| > eps*a`` (ascending as an
    integer) and each size ``s > eps*b`` (ascending), the right subsets of
    size ``s`` with the largest and the smallest edge count to X are the
    top-``s`` and bottom-``s`` vertices by degree into X; these two are the
    only candidates for the extreme deviation, so checking them is exact.

    Returns ``(xmask, ymask)`` of the first witness or None.
    """
    total = 0
    for c in cols:
        total += c.bit_count()
    ab = a * b
    for xmask in range(1, 1 << a):
        x = xmask.bit_count()
        if x * eps_den <= eps_num * a:
            continue
        ranked = sorted((cols[y] & xmask).bit_count() * b + y for y in range(b))
        degs = [r // b for r in ranked]
        ys = [r % b for r in ranked]
        low = [0] * (b + 1)
        for i in range(b):
            low[i + 1] = low[i] + degs[i]
        for s in range(1, b + 1):
            if s * eps_den <= eps_num * b:
                continue
            bound = eps_num * x * s * ab
            high_sum = low[b] - low[b - s]
            if eps_den * abs(high_sum * ab - total * x * s) >= bound:
                ymask = 0
                for y in ys[b - s:]:
                    ymask |= 1 << y
                return xmask, ymask
            if eps_den * abs(low[s] * ab - total * x * s) >= bound:
                ymask = 0
                for y in ys[:s]:
                    ymask |= 1 << y
                return xmask, ymask
    return None

"""Named ADE and Euclidean diagrams as edge lists."""


def path(n, start=0):
    return [(start + i, start + i + 1) for i in range(n - 1)]


def branched(p, q, r):
    """Tree with a centre 0 and three arms of p, q, r further vertices."""
    edges, nxt = [], 1
    for arm in (p, q, r):
        prev = 0
        for _ in range(arm):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return nxt, edges


def dynkin():
    out = [(f"A{n}", n, path(n)) for n in range(1, 10)]
    out += [(f"D{n}", *branched(1, 1, n - 3)) for n in range(4, 10)]
    out += [("E6", *branched(1, 2, 2)), ("E7", *branched(1, 2, 3)), ("E8", *branched(1, 2, 4))]
    return out


def euclidean():
    out = [("~A0", 1, [(0, 0)]), ("~A1", 2, [(0, 1), (0, 1)])]
    out += [(f"~A{n - 1}", n, path(n) + [(n - 1, 0)]) for n in range(3, 10)]
    out += [("~D4", 5, [(0, 1), (0, 2), (0, 3), (0, 4)])]
    for n in range(5, 9):  # ~D_n: a path of n - 3 vertices with two leaves at each end
        spine = path(n - 3)
        leaves = [(0, n - 3), (0, n - 2), (n - 4, n - 1), (n - 4, n)]
        out.append((f"~D{n}", n + 1, spine + leaves))
    out += [("~E6", *branched(2, 2, 2)), ("~E7", *branched(1, 3, 3)), ("~E8", *branched(1, 2, 5))]
    return out


def wild():
    return [
        ("two loops", 1, [(0, 0), (0, 0)]),
        ("triple edge", 2, [(0, 1), (0, 1), (0, 1)]),
        ("loop on a path", 2, [(0, 1), (1, 1)]),
        ("star with five leaves", 6, [(0, i) for i in range(1, 6)]),
        ("tree (2,2,3)", *branched(2, 2, 3)),
        ("tree (1,3,4)", *branched(1, 3, 4)),
        ("double edge in a path", 3, [(0, 1), (0, 1), (1, 2)]),
        ("theta graph", 4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ]

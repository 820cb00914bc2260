"""Independent reference computations used only by the tests."""

import itertools

import sympy as sp

t = sp.symbols("t")


def alexander_from_braid(n, letters):
    """Alexander polynomial of a braid closure from the reduced Burau matrix,
    normalised to a coefficient tuple with positive leading term."""
    m = n - 1
    if m == 0:
        return (1,)
    mat = sp.eye(m)
    for g in letters:
        i = abs(g) - 1
        b = sp.eye(m)
        if i - 1 >= 0:
            b[i, i - 1] = t
        b[i, i] = -t
        if i + 1 < m:
            b[i, i + 1] = 1
        if g < 0:
            b = b.inv()
        mat = mat * b
    return normalise(sp.cancel((sp.eye(m) - mat).det() * (1 - t) / (1 - t ** n)))


def normalise(expr):
    p = sp.numer(sp.cancel(sp.together(expr)))
    if p == 0:
        return (0,)
    coeffs = sp.Poly(sp.expand(p), t).all_coeffs()
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(int(c) for c in coeffs)


def seifert_alexander(rows):
    v = sp.Matrix(rows)
    return normalise((v - t * v.T).det())


def brute_bracket(pd_quads, free=0):
    """Bracket by direct enumeration, loops counted with a fresh graph walk."""
    total = {}
    c = len(pd_quads)
    for state in itertools.product((0, 1), repeat=c):
        adj = {}
        for (a, b, cc, d), s in zip(pd_quads, state):
            pairs = ((a, b), (cc, d)) if s == 0 else ((a, d), (b, cc))
            for x, y in pairs:
                adj.setdefault(x, []).append(y)
                adj.setdefault(y, []).append(x)
        seen, loops = set(), 0
        for start in adj:
            if start in seen:
                continue
            loops += 1
            stack = [start]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                stack.extend(adj[u])
        na = state.count(0)
        term = sp.expand(sp.Symbol("A") ** (2 * na - c) * (-sp.Symbol("A") ** 2 - sp.Symbol("A") ** -2) ** (loops - 1 + free))
        for e, coef in sp.Poly(sp.expand(term * sp.Symbol("A") ** (4 * c + 8)), sp.Symbol("A")).terms():
            k = e[0] - 4 * c - 8
            total[k] = total.get(k, 0) + int(coef)
    return {k: v for k, v in total.items() if v}


# ---- free-group oracle for Milnor invariants of pure braid closures ------------

def _reduce(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return out


def _inv(word):
    return [-g for g in reversed(word)]


def _substitute(word, images):
    out = []
    for g in word:
        out += images[g] if g > 0 else _inv(images[-g])
    return _reduce(out)


def artin_images(n, letters):
    """Images of free generators 1..n under the Artin action of the braid,
    letters applied left to right: x -> (x)s_1 -> ((x)s_1)s_2 ..."""
    img = {i: [i] for i in range(1, n + 1)}
    for g in letters:
        i = abs(g)
        step = {j: [j] for j in range(1, n + 1)}
        if g > 0:
            step[i], step[i + 1] = [i, i + 1, -i], [i]
        else:
            step[i], step[i + 1] = [i + 1], [-(i + 1), i, i + 1]
        img = {j: _substitute(w, step) for j, w in img.items()}
    return img


def conjugator(word, j):
    """``u`` with ``word = u x_j u^-1`` (reduced)."""
    k = len(word) // 2
    assert word[k] == j
    u = word[:k]
    assert _reduce(word[k + 1:]) == _reduce(_inv(u)), "not a conjugate of the generator"
    return u


def magnus_coefficient(word, mono):
    """Coefficient of X_{m1}...X_{mr} in the Magnus image of a free word."""
    # dynamic programming over prefixes of mono
    r = len(mono)
    coef = [1] + [0] * r
    for g in word:
        j, e = abs(g), (1 if g > 0 else -1)
        new = coef[:]
        for end in range(1, r + 1):
            # append a run mono[s:end] of the same letter j contributed by this factor
            s = end - 1
            while s >= 0 and mono[s] == j:
                run = end - s
                factor = 1 if e > 0 and run == 1 else (0 if e > 0 else (-1) ** run)
                new[end] += coef[s] * factor
                s -= 1
        coef = new
    return coef[r]

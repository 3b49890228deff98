#!/usr/bin/env python3
"""Regenerates data/knots_leq9.tsv and data/extras.tsv from scratch.

The table of prime knots through 9 crossings is rebuilt rather than copied:
closed-curve shadows are enumerated as odd/even chord pairings, realized as
planar maps, and classified by Jones polynomial. Alternating knots come from
the alternating assignment of each shadow; non-alternating knots come from
single-crossing flips and short braid closures. Nothing is written unless
every certificate passes: per-crossing class counts must match the classical
tabulation (1, 1, 2, 3, 7, 18, 41 alternating knots for 3..9 crossings;
3 and 8 non-alternating knots at 8 and 9 crossings), alternating entries
must be adequate with Jones span equal to the crossing number, and
non-alternating entries must be certified to have no diagram with fewer
crossings. A full run takes a few minutes of pure Python.

Everything here is an independent oracle for the Rust crates: shared code
is limited to the data files themselves.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from pathlib import Path

ALT_COUNTS = {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 18, 9: 41}
NONALT_COUNTS = {8: 3, 9: 8}

PINNED_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


# ---------------------------------------------------------------------------
# Laurent polynomials as {exponent: coefficient} dicts.


def pmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def pinv(a):
    return {-e: c for e, c in a.items()}


def pkey(a):
    return tuple(sorted(a.items()))


def pstr(a):
    return ",".join(f"{e}:{c}" for e, c in sorted(a.items()))


# ---------------------------------------------------------------------------
# PD diagrams: lists of 4-tuples of edge labels, slot 0 the incoming
# under-strand, slots listed in rotation order around the crossing.


def pd_text(tuples):
    return " ".join("X({},{},{},{})".format(*t) for t in tuples)


def parse_pd(text):
    out = []
    for part in text.replace(")", ") ").split():
        part = part.strip()
        if not part:
            continue
        assert part.startswith("X(") and part.endswith(")"), part
        out.append(tuple(int(x) for x in part[2:-1].split(",")))
    return out


def walk_orient(tuples):
    """Walks the knot, relabelling edges 1..2n in strand order.

    Returns (relabelled tuples, writhe). The under-strand runs slot 0 to
    slot 2; a tuple whose under-strand turns out to run the other way is
    rotated by two slots, so builders only have to get the rotation order
    and the under/over diagonal right. The crossing sign is +1 exactly when
    the over-strand enters at slot 1 of the repaired tuple. Raises
    ValueError on links or inconsistent tuples.
    """
    n = len(tuples)
    occ = {}
    for ci, t in enumerate(tuples):
        for s in range(4):
            occ.setdefault(t[s], []).append((ci, s))
    for lab, ends in occ.items():
        if len(ends) != 2:
            raise ValueError(f"edge {lab} has {len(ends)} ends")

    rot = [0] * n
    over_entry = {}
    order = []
    cur = (0, 0)
    for _ in range(2 * n):
        ci, s = cur
        if s == 2:
            rot[ci] = 2
        elif s != 0:
            over_entry[ci] = s
        exit_slot = s ^ 2
        lab = tuples[ci][exit_slot]
        order.append(lab)
        a, b = occ[lab]
        cur = b if a == (ci, exit_slot) else a
    if cur != (0, 0) or len(over_entry) != n:
        raise ValueError("diagram is not a single closed strand")

    relabel = {lab: i + 1 for i, lab in enumerate(order)}
    if len(relabel) != 2 * n:
        raise ValueError("strand revisits an edge")
    new_tuples = []
    writhe = 0
    for ci, t in enumerate(tuples):
        if rot[ci]:
            t = (t[2], t[3], t[0], t[1])
        new_tuples.append(tuple(relabel[x] for x in t))
        writhe += 1 if (over_entry[ci] ^ rot[ci]) == 1 else -1
    return new_tuples, writhe


def edge_ends(tuples):
    """Tail and head occurrences of every edge of a strand-ordered diagram.

    Needs labels 1..2n in walk order, so that the exit label at a crossing is
    the entry label plus one (mod 2n).
    """
    n = len(tuples)
    two_n = 2 * n
    tails, heads = {}, {}
    for ci, t in enumerate(tuples):
        heads[t[0]] = (ci, 0)
        tails[t[2]] = (ci, 2)
        if t[3] == t[1] % two_n + 1:
            heads[t[1]] = (ci, 1)
            tails[t[3]] = (ci, 3)
        elif t[1] == t[3] % two_n + 1:
            heads[t[3]] = (ci, 3)
            tails[t[1]] = (ci, 1)
        else:
            raise ValueError("labels are not in strand order")
    return tails, heads


def pd_faces(tuples):
    """Face count of the map whose rotation at each crossing is the slot
    order. Planar diagrams have n + 2 faces."""
    n = len(tuples)
    occ = {}
    for ci, t in enumerate(tuples):
        for s in range(4):
            occ.setdefault(t[s], []).append(4 * ci + s)
    mate = [0] * (4 * n)
    for ends in occ.values():
        a, b = ends
        mate[a] = b
        mate[b] = a
    seen = [False] * (4 * n)
    faces = 0
    for dt in range(4 * n):
        if seen[dt]:
            continue
        faces += 1
        x = dt
        while not seen[x]:
            seen[x] = True
            m = mate[x]
            x = (m & ~3) | ((m + 1) & 3)
    return faces


def bracket_counts(tuples):
    """State sum organised as {(A-exponent, circle count): states}."""
    n = len(tuples)
    labels = sorted({x for t in tuples for x in t})
    lid = {lab: i for i, lab in enumerate(labels)}
    m = len(labels)
    cr = []
    for t in tuples:
        a, b, c, d = (lid[x] for x in t)
        cr.append((a, d, b, c, a, b, c, d))
    counts = {}
    rng = range(n)
    for mask in range(1 << n):
        par = list(range(m))
        for i in rng:
            j = cr[i]
            if (mask >> i) & 1:
                u1, v1, u2, v2 = j[4], j[5], j[6], j[7]
            else:
                u1, v1, u2, v2 = j[0], j[1], j[2], j[3]
            while par[u1] != u1:
                par[u1] = par[par[u1]]
                u1 = par[u1]
            while par[v1] != v1:
                par[v1] = par[par[v1]]
                v1 = par[v1]
            if u1 != v1:
                par[u1] = v1
            while par[u2] != u2:
                par[u2] = par[par[u2]]
                u2 = par[u2]
            while par[v2] != v2:
                par[v2] = par[par[v2]]
                v2 = par[v2]
            if u2 != v2:
                par[u2] = v2
        circles = 0
        for i in range(m):
            if par[i] == i:
                circles += 1
        key = (n - 2 * bin(mask).count("1"), circles)
        counts[key] = counts.get(key, 0) + 1
    return counts


def bracket_poly(tuples):
    counts = bracket_counts(tuples)
    max_c = max(c for (_, c) in counts)
    delta = {2: -1, -2: -1}
    dpow = [{0: 1}]
    for _ in range(max_c):
        dpow.append(pmul(dpow[-1], delta))
    out = {}
    for (e, c), cnt in counts.items():
        for de, dc in dpow[c - 1].items():
            out[e + de] = out.get(e + de, 0) + cnt * dc
    return {e: c for e, c in out.items() if c}


def jones_q(tuples, writhe):
    """V(q) = (-A^3)^(-w) <D> with q = A^(-2); exponents are even for knots."""
    br = bracket_poly(tuples)
    sgn = -1 if writhe % 2 else 1
    v = {}
    for e, cf in br.items():
        ee = e - 3 * writhe
        assert ee % 2 == 0, "odd bracket exponent after writhe normalisation"
        q = -ee // 2
        v[q] = v.get(q, 0) + sgn * cf
    return {e: c for e, c in v.items() if c}


def span_t(vq):
    return (max(vq) - min(vq)) // 2


def det_of(vq):
    # t = q^2, evaluated at t = -1
    return abs(sum(c * (-1) ** ((e // 2) % 2) for e, c in vq.items()))


def state_stats(tuples):
    """(sA, sB, A-adequate, B-adequate) of the two extreme states."""
    labels = sorted({x for t in tuples for x in t})
    lid = {lab: i for i, lab in enumerate(labels)}
    m = len(labels)
    out = []
    for b_state in (False, True):
        par = list(range(m))

        def find(x):
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        for t in tuples:
            a, b, c, d = (lid[x] for x in t)
            pairs = ((a, b), (c, d)) if b_state else ((a, d), (b, c))
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    par[ru] = rv
        circles = sum(1 for i in range(m) if find(i) == i)
        adequate = True
        for t in tuples:
            a, b, c, d = (lid[x] for x in t)
            arc1, arc2 = (a, c) if b_state else (a, b)
            if find(arc1) == find(arc2):
                adequate = False
                break
        out.append((circles, adequate))
    (sa, aa), (sb, ab) = out
    return sa, sb, aa, ab


def genus_of(tuples):
    sa, sb, _, _ = state_stats(tuples)
    g2 = len(tuples) + 2 - sa - sb
    assert g2 % 2 == 0 and g2 >= 0
    return g2 // 2


class Diag:
    """An oriented knot diagram with its invariants computed on demand."""

    def __init__(self, tuples, keep_labels=False):
        oriented, self.writhe = walk_orient(tuples)
        self.tuples = [tuple(t) for t in tuples] if keep_labels else oriented
        if pd_faces(self.tuples) != len(self.tuples) + 2:
            raise ValueError("tuples do not describe a planar diagram")
        self._v = None

    @property
    def n(self):
        return len(self.tuples)

    @property
    def jones(self):
        if self._v is None:
            self._v = jones_q(self.tuples, self.writhe)
        return self._v

    def text(self):
        return pd_text(self.tuples)

    def mirrored(self):
        return Diag([(t[0], t[3], t[2], t[1]) for t in self.tuples])


# ---------------------------------------------------------------------------
# Shadow enumeration. A shadow is a closed curve with n double points,
# encoded as a chord pairing of the 2n passage positions; the two passages
# of a crossing always sit at positions of opposite parity.


def chord_data(m, two_n):
    """(cid, chords): chord index per position, (min, max) position pairs."""
    n = two_n // 2
    cid = [0] * two_n
    chords = [None] * n
    for p in range(0, two_n, 2):
        k = p // 2
        q = m[p]
        cid[p] = k
        cid[q] = k
        chords[k] = (p, q) if p < q else (q, p)
    return cid, chords


def chords_ok(chords):
    """Reduced and prime: every chord interlaced, interlacement connected."""
    n = len(chords)
    adj = [[] for _ in range(n)]
    for i in range(n):
        a1, b1 = chords[i]
        for j in range(i + 1, n):
            a2, b2 = chords[j]
            if (a1 < a2 < b1) != (a1 < b2 < b1):
                adj[i].append(j)
                adj[j].append(i)
    if any(not a for a in adj):
        return False
    seen = [False] * n
    stack = [0]
    seen[0] = True
    hit = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                hit += 1
                stack.append(w)
    return hit == n


def canon_key(cid, two_n):
    """Minimal first-occurrence relabelling over all rotations and the
    reflection; a dedup key for shadows."""
    best = None
    for flip in (False, True):
        for s in range(two_n):
            lab = [255] * (two_n >> 1)
            nxt = 0
            cur = bytearray(two_n)
            better = best is None
            j = 0
            while j < two_n:
                p = (s - j) % two_n if flip else (s + j) % two_n
                c = cid[p]
                l = lab[c]
                if l == 255:
                    lab[c] = l = nxt
                    nxt += 1
                cur[j] = l
                if not better:
                    b = best[j]
                    if l > b:
                        break
                    if l < b:
                        better = True
                j += 1
            if j == two_n and better:
                best = bytes(cur)
    return best


def visit_darts(cid, chords, eps, two_n):
    """(in_dart, out_dart) per position; crossing k owns darts 4k..4k+3 in
    rotation order, the first visit running dart 0 to dart 2."""
    ind = [0] * two_n
    outd = [0] * two_n
    for p in range(two_n):
        k = cid[p]
        if p == chords[k][0]:
            ind[p], outd[p] = 4 * k, 4 * k + 2
        elif eps[k] == 1:
            ind[p], outd[p] = 4 * k + 1, 4 * k + 3
        else:
            ind[p], outd[p] = 4 * k + 3, 4 * k + 1
    return ind, outd


def realize(m, two_n, cid, chords):
    """Searches crossing handedness making the map planar. Returns the sign
    vector or None; the first chord's sign is fixed, fixing the mirror."""
    n = two_n // 2
    for bits in range(1 << (n - 1)):
        eps = [1] * n
        for i in range(n - 1):
            if (bits >> i) & 1:
                eps[i + 1] = -1
        ind, outd = visit_darts(cid, chords, eps, two_n)
        mate = [0] * (4 * n)
        for p in range(two_n):
            o = outd[p]
            i = ind[(p + 1) % two_n]
            mate[o] = i
            mate[i] = o
        seen = [False] * (4 * n)
        faces = 0
        for dt in range(4 * n):
            if seen[dt]:
                continue
            faces += 1
            x = dt
            while not seen[x]:
                seen[x] = True
                mm = mate[x]
                x = (mm & ~3) | ((mm + 1) & 3)
        if faces == n + 2:
            return eps
    return None


class Shadow:
    def __init__(self, m, two_n, cid, chords, eps):
        self.m = m
        self.two_n = two_n
        self.cid = cid
        self.chords = chords
        self.eps = eps

    @property
    def n(self):
        return self.two_n // 2

    def assignment(self, under_first):
        """PD tuples for a choice of under-strand per crossing; edge j+1 runs
        from the exit of position j to the entry of position j+1."""
        n = self.n
        ind, outd = visit_darts(self.cid, self.chords, self.eps, self.two_n)
        lab = [0] * (4 * n)
        for p in range(self.two_n):
            lab[outd[p]] = p + 1
            lab[ind[(p + 1) % self.two_n]] = p + 1
        tuples = []
        for k in range(n):
            if under_first[k]:
                s0 = 0
            elif self.eps[k] == 1:
                s0 = 1
            else:
                s0 = 3
            tuples.append(tuple(lab[4 * k + ((s0 + off) & 3)] for off in range(4)))
        return tuples

    def alternating(self):
        """The assignment putting every even position under; the unique
        alternating diagram of the shadow up to mirror."""
        return [f % 2 == 0 for (f, _) in self.chords]


def enumerate_shadows(n):
    """All prime reduced knot shadows with n crossings, one per symmetry
    class, realized in the plane."""
    two_n = 2 * n
    odds = list(range(1, two_n, 2))
    seen = set()
    shadows = []
    for perm in itertools.permutations(odds):
        m = [0] * two_n
        for i, q in enumerate(perm):
            m[2 * i] = q
            m[q] = 2 * i
        cid, chords = chord_data(m, two_n)
        if not chords_ok(chords):
            continue
        key = canon_key(cid, two_n)
        if key in seen:
            continue
        seen.add(key)
        eps = realize(m, two_n, cid, chords)
        if eps is not None:
            shadows.append(Shadow(m, two_n, cid, chords, eps))
    return shadows


# ---------------------------------------------------------------------------
# Braid closures and connect sums, for the extras and as a safety net for
# the non-alternating search.


def braid_closure(strands, word):
    """PD tuples of the closure; word entries are (generator index, positive).
    Positive crossings take the strand entering top-left over to bottom-right.
    """
    cur = list(range(1, strands + 1))
    nxt = strands + 1
    tuples = []
    for i, positive in word:
        a, b = cur[i], cur[i + 1]
        c, d = nxt, nxt + 1
        nxt += 2
        if positive:
            tuples.append((b, a, c, d))
        else:
            tuples.append((a, c, d, b))
        cur[i], cur[i + 1] = c, d
    subst = {cur[s]: s + 1 for s in range(strands)}
    return [tuple(subst.get(x, x) for x in t) for t in tuples]


def connect_sum(d1: Diag, d2: Diag):
    """Orientation-respecting sum splicing edge 1 of each diagram."""
    shift = 2 * d1.n
    t1 = [list(t) for t in d1.tuples]
    t2 = [list(tuple(x + shift for x in t)) for t in d2.tuples]
    tails1, heads1 = edge_ends(d1.tuples)
    tails2, heads2 = edge_ends(d2.tuples)
    e1 = 1
    e2 = 1
    fresh = 2 * (d1.n + d2.n) + 1
    ci, s = heads2[e2]
    t2[ci][s] = e1
    ci, s = tails2[e2]
    t2[ci][s] = fresh
    ci, s = heads1[e1]
    t1[ci][s] = fresh
    return Diag([tuple(t) for t in t1 + t2])


def torus3_braid(reps):
    return braid_closure(3, [(0, True), (1, True)] * reps)


def pretzel(ks):
    """PD tuples of the three-band pretzel P(k1,k2,k3); the sign of k picks
    the twist direction of the band. Links raise when walked."""
    assert len(ks) == 3 and all(k != 0 for k in ks)
    tuples = []
    nxt = 1
    tops, bots = [], []
    for k in ks:
        tl, tr = nxt, nxt + 1
        nxt += 2
        l, r = tl, tr
        for _ in range(abs(k)):
            c, d = nxt, nxt + 1
            nxt += 2
            tuples.append((r, l, c, d) if k > 0 else (l, c, d, r))
            l, r = c, d
        tops.append((tl, tr))
        bots.append((l, r))
    par = {}

    def find(x):
        while par.get(x, x) != x:
            par[x] = par.get(par[x], par[x])
            x = par[x]
        return x

    for a, b in (
        (tops[0][1], tops[1][0]),
        (tops[1][1], tops[2][0]),
        (tops[0][0], tops[2][1]),
        (bots[0][1], bots[1][0]),
        (bots[1][1], bots[2][0]),
        (bots[0][0], bots[2][1]),
    ):
        ra, rb = find(a), find(b)
        if ra != rb:
            par[ra] = rb
    return [tuple(find(x) for x in t) for t in tuples]


# ---------------------------------------------------------------------------
# Classification.


def norm_jones(v):
    """Mirror normalisation: prefer the chirality with the more positive
    exponent range, then the lexicographically larger term list.
    Returns (key, flip) where flip says the mirror image was preferred."""
    w = pinv(v)
    sv = (max(v) + min(v), pkey(v))
    sw = (max(w) + min(w), pkey(w))
    if sv >= sw:
        return pkey(v), False
    return pkey(w), True


def composite_keys(alt_by_n):
    """Jones keys of every composite knot with at most 9 crossings. Their
    summands are alternating with 3 to 6 crossings, since composites of
    alternating knots add crossing numbers."""
    small = []
    for n in range(3, 7):
        for d in alt_by_n.get(n, []):
            small.append((n, d.jones))
    keys = set()
    for (na, va), (nb, vb) in itertools.combinations_with_replacement(small, 2):
        if na + nb > 9:
            continue
        for x in (va, pinv(va)):
            for y in (vb, pinv(vb)):
                p = pmul(x, y)
                keys.add(pkey(p))
                keys.add(pkey(pinv(p)))
    v3 = alt_by_n[3][0].jones
    for combo in itertools.product((v3, pinv(v3)), repeat=3):
        p = pmul(pmul(combo[0], combo[1]), combo[2])
        keys.add(pkey(p))
        keys.add(pkey(pinv(p)))
    return keys


class Entry:
    def __init__(self, name, diag: Diag, alternating):
        self.name = name
        self.diag = diag
        self.alternating = alternating
        sa, sb, aa, ab = state_stats(diag.tuples)
        self.genus = (diag.n + 2 - sa - sb) // 2
        self.adequate = aa and ab
        self.det = det_of(diag.jones)

    def tsv(self):
        return "\t".join(
            [
                self.name,
                self.diag.text(),
                "1" if self.alternating else "0",
                "1" if self.adequate else "0",
                str(self.genus),
                str(self.det),
                pstr(self.diag.jones),
            ]
        )


def classify_alternating(shadows_by_n):
    """One entry per alternating knot class, keyed by normalised Jones."""
    classes = {}
    for n, shadows in shadows_by_n.items():
        for sh in shadows:
            d = Diag(sh.assignment(sh.alternating()))
            key, flip = norm_jones(d.jones)
            if flip:
                d = d.mirrored()
            assert span_t(d.jones) == n, "alternating span must equal crossings"
            cur = classes.get((n, key))
            if cur is None or d.text() < cur.text():
                classes[(n, key)] = d
    by_n = {}
    for (n, key), d in sorted(classes.items()):
        by_n.setdefault(n, []).append(d)
    return by_n


def merge_candidate(found, d, n, known_keys):
    """Admits d if it certifies a new knot of crossing number exactly n, or
    improves an existing representative (least genus, then lexicographic)."""
    v = d.jones
    if span_t(v) >= n:
        return
    key, flip = norm_jones(v)
    if key in known_keys:
        return
    if flip:
        d = d.mirrored()
    cur = found.get(key)
    if cur is None or (genus_of(d.tuples), d.text()) < (
        genus_of(cur.tuples),
        cur.text(),
    ):
        found[key] = d


def flip_candidates(found, shadows, n, known_keys, flips):
    """Diagrams obtained by flipping a few crossings of each alternating
    shadow assignment. A candidate must have Jones span under n (so no
    n-crossing alternating diagram exists for it) and must avoid the Jones
    classes of every knot with fewer crossings, including composites."""
    for sh in shadows:
        base = sh.alternating()
        for combo in itertools.combinations(range(n), flips):
            uf = list(base)
            for k in combo:
                uf[k] = not uf[k]
            merge_candidate(found, Diag(sh.assignment(uf)), n, known_keys)


def braid_candidates(found, n, known_keys):
    """Knot closures of 3-strand braid words with n letters, same filters."""
    letters = [(0, True), (0, False), (1, True), (1, False)]
    seen_words = set()
    for word in itertools.product(letters, repeat=n):
        variants = []
        for rev in (word, word[::-1]):
            for r in range(n):
                rot = rev[r:] + rev[:r]
                variants.append(rot)
                variants.append(tuple((1 - i, p) for i, p in rot))
        if min(variants) in seen_words:
            continue
        seen_words.add(min(variants))
        perm = [0, 1, 2]
        for i, _ in word:
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if any(perm[i] == i for i in range(3)):
            continue
        merge_candidate(found, Diag(braid_closure(3, list(word))), n, known_keys)


def pretzel_candidates(found, n, known_keys):
    """Knots among the three-band pretzels with n crossings, same filters."""
    for a in range(1, n - 1):
        for b in range(1, n - a):
            c = n - a - b
            for sa, sb, sc in itertools.product((1, -1), repeat=3):
                try:
                    d = Diag(pretzel((sa * a, sb * b, sc * c)))
                except ValueError:
                    continue
                merge_candidate(found, d, n, known_keys)


# ---------------------------------------------------------------------------
# Certification and output.


def certify(cond, msg):
    if not cond:
        print(f"CERTIFICATE FAILED: {msg}", file=sys.stderr)
        sys.exit(1)
    print(f"  ok: {msg}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=9, help="largest crossing number")
    ap.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data",
        help="output directory",
    )
    args = ap.parse_args()

    t0 = time.time()

    # Convention anchors, fixed by hand computation on the trefoil.
    trefoil = Diag(parse_pd(PINNED_TREFOIL), keep_labels=True)
    assert trefoil.writhe == 3
    assert bracket_poly(trefoil.tuples) == {5: -1, -3: -1, -7: 1}
    assert trefoil.jones == {2: 1, 6: 1, 8: -1}
    assert state_stats(trefoil.tuples) == (2, 3, True, True)

    shadows_by_n = {}
    for n in range(3, args.nmax + 1):
        t = time.time()
        shadows_by_n[n] = enumerate_shadows(n)
        print(
            f"shadows n={n}: {len(shadows_by_n[n])} prime reduced curves "
            f"({time.time() - t:.1f}s)"
        )

    alt_by_n = classify_alternating(shadows_by_n)
    for n in sorted(alt_by_n):
        if n in ALT_COUNTS:
            certify(
                len(alt_by_n[n]) == ALT_COUNTS[n],
                f"{ALT_COUNTS[n]} alternating knots with {n} crossings "
                f"(found {len(alt_by_n[n])})",
            )

    # Knots of lower crossing number, both chiralities, composites and the
    # unknot; used to reject non-minimal diagrams in the search below.
    known_keys = {pkey({0: 1})} | composite_keys(alt_by_n)

    entries = []
    nonalt_by_n = {}
    for n in range(3, args.nmax + 1):
        for d in alt_by_n.get(n, []):
            known_keys.add(pkey(d.jones))
            known_keys.add(pkey(pinv(d.jones)))
        if n in NONALT_COUNTS:
            found = {}
            flip_candidates(found, shadows_by_n[n], n, known_keys, 1)
            pretzel_candidates(found, n, known_keys)
            if len(found) < NONALT_COUNTS[n]:
                print(f"  found {len(found)} so far; adding braid closures")
                braid_candidates(found, n, known_keys)
            if len(found) < NONALT_COUNTS[n]:
                print(f"  found {len(found)} so far; adding double flips")
                flip_candidates(found, shadows_by_n[n], n, known_keys, 2)
            if n == 8 and any(genus_of(d.tuples) != 1 for d in found.values()):
                # the three 8-crossing entries double as genus-one fixtures
                flip_candidates(found, shadows_by_n[n], n, known_keys, 2)
            certify(
                len(found) == NONALT_COUNTS[n],
                f"{NONALT_COUNTS[n]} non-alternating knots with {n} crossings "
                f"(found {len(found)})",
            )
            nonalt_by_n[n] = [found[k] for k in sorted(found)]
            for d in nonalt_by_n[n]:
                known_keys.add(pkey(d.jones))
                known_keys.add(pkey(pinv(d.jones)))

    for n in range(3, args.nmax + 1):
        alts = sorted(
            alt_by_n.get(n, []), key=lambda d: (det_of(d.jones), pkey(d.jones))
        )
        nonalts = sorted(
            nonalt_by_n.get(n, []), key=lambda d: (det_of(d.jones), pkey(d.jones))
        )
        idx = 1
        for d in alts:
            entries.append(Entry(f"{n}_{idx}", d, True))
            idx += 1
        for d in nonalts:
            entries.append(Entry(f"{n}_{idx}", d, False))
            idx += 1

    by_name = {e.name: e for e in entries}

    # Pin the published trefoil presentation; it must land in the same class.
    if "3_1" in by_name:
        e = by_name["3_1"]
        certify(
            trefoil.jones == e.diag.jones,
            "pinned trefoil presentation matches the 3_1 class",
        )
        e.__init__("3_1", trefoil, True)

    for e in entries:
        if e.alternating:
            certify_quiet = e.adequate and e.genus == 0 and span_t(e.diag.jones) == e.diag.n
            if not certify_quiet:
                certify(False, f"{e.name}: alternating entry invariants")
        else:
            if not (span_t(e.diag.jones) < e.diag.n and e.genus >= 1):
                certify(False, f"{e.name}: non-alternating entry invariants")
        if e.det % 2 != 1:
            certify(False, f"{e.name}: knot determinant must be odd")
    certify(True, "per-entry invariants (adequacy, span, genus, determinant)")

    if args.nmax >= 9:
        certify(len(entries) == 84, f"84 entries total (found {len(entries)})")
    if 8 in nonalt_by_n:
        dets = [det_of(d.jones) for d in nonalt_by_n[8]]
        certify(
            sorted(dets) == [3, 9, 15],
            f"8-crossing non-alternating determinants 3, 9, 15 (found {sorted(dets)})",
        )

    # Extras: presentations exercising inadequacy, higher diagram genus and
    # connect sums. Certified against the table where feasible.
    extras = []

    tre5 = Diag(braid_closure(2, [(0, True)] * 4 + [(0, False)]))
    assert norm_jones(tre5.jones)[0] == pkey(trefoil.jones)
    sa, sb, aa, ab = state_stats(tre5.tuples)
    assert not (aa and ab) and span_t(tre5.jones) == 3
    extras.append(
        (
            "trefoil_inadequate_c5",
            tre5,
            f"inadequate 5-crossing trefoil, span 3, genus {genus_of(tre5.tuples)}",
        )
    )

    braid4 = Diag(torus3_braid(2))
    assert norm_jones(braid4.jones)[0] == pkey(trefoil.jones)
    assert genus_of(braid4.tuples) == 1
    extras.append(("trefoil_braid4", braid4, "genus-one 4-crossing trefoil"))

    sum8 = connect_sum(braid4, braid4)
    assert sum8.jones == pmul(braid4.jones, braid4.jones)
    assert genus_of(sum8.tuples) == 2
    extras.append(("genus2_sum_c8", sum8, "connect sum of two genus-one trefoils"))

    t34 = Diag(torus3_braid(4))
    if "8_19" in by_name:
        certify(
            norm_jones(t34.jones)[0] == norm_jones(by_name["8_19"].diag.jones)[0],
            "torus braid on 8 crossings is the 8_19 knot",
        )
    extras.append(
        ("t34_braid_c8", t34, f"8_19 as a torus braid, diagram genus {genus_of(t34.tuples)}")
    )

    t310 = Diag(torus3_braid(10))
    extras.append(
        (
            "t3_10_braid_c20",
            t310,
            f"20-crossing torus braid, diagram genus {genus_of(t310.tuples)}",
        )
    )

    args.out.mkdir(parents=True, exist_ok=True)
    cat = args.out / "knots_leq9.tsv"
    with cat.open("w") as f:
        f.write("# Prime knots through 9 crossings. Generated by tools/gen_catalog.py.\n")
        f.write("# Knots are rebuilt from shadow enumeration and certified against\n")
        f.write("# the classical tabulation counts before writing; within a crossing\n")
        f.write("# number, alternating knots come first, ordered by determinant then\n")
        f.write("# Jones polynomial (so non-alternating numbering starts at 8_19).\n")
        f.write("# columns: name pd alternating adequate genus determinant jones\n")
        f.write("# jones lists exponent:coefficient pairs of V(q), ascending.\n")
        for e in entries:
            f.write(e.tsv() + "\n")

    ext = args.out / "extras.tsv"
    with ext.open("w") as f:
        f.write("# Auxiliary diagrams: inadequate, higher-genus and composite\n")
        f.write("# presentations. Generated by tools/gen_catalog.py.\n")
        f.write("# columns: name pd note\n")
        for name, d, note in extras:
            f.write(f"{name}\t{d.text()}\t{note}\n")

    print(f"wrote {cat} ({len(entries)} entries) and {ext} ({len(extras)} extras)")
    print(f"total time {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()

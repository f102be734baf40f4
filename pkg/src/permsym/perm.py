"""Permutations, generated groups with stabilizer chains, orbit/stabilizer
and block machinery, transitivity classification, and derived actions on
k-subsets and on cosets.

Conventions: points are 0-indexed internally and 1-indexed in all text I/O;
actions are on the right, and ``p * q`` means "apply p, then q", so that
``alpha . (p*q) == (alpha . p) . q``.
"""

import math
from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from .errors import InputError, VerificationError

KSUBSET_DEGREE_CAP = 10_000
COSET_INDEX_CAP = 10_000
ENUMERATION_ORDER_CAP = 100_000


class Permutation:
    """Immutable bijection on {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not 0 <= i < n or seen[i]:
                raise InputError(f"images {images!r} are not a bijection on 0..{n - 1}")
            seen[i] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        if other.degree != self.degree:
            raise InputError("degree mismatch")
        oi = other.images
        return Permutation(tuple(oi[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        r = Permutation.identity(self.degree)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def conjugate(self, h: "Permutation") -> "Permutation":
        """h^-1 * self * h."""
        return (h.inverse() * self) * h

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def first_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.images == self.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles of 1-indexed points, e.g. "(1 2 3)(4 5)"; "()" is
    the identity.  Raises InputError naming the character position on bad input."""
    images = list(range(degree))
    used = set()
    pos = 0
    n = len(text)
    saw_cycle = False
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise InputError(f"expected '(' at position {pos} in {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise InputError(f"unclosed '(' at position {pos} in {text!r}")
        body = text[pos + 1 : end].replace(",", " ").split()
        cycle = []
        for tok in body:
            if not tok.isdigit():
                raise InputError(f"bad token {tok!r} at position {pos} in {text!r}")
            v = int(tok)
            if not 1 <= v <= degree:
                raise InputError(f"point {v} out of range 1..{degree}")
            v -= 1
            if v in used:
                raise InputError(f"repeated point {v + 1}")
            used.add(v)
            cycle.append(v)
        if cycle:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            images[cycle[-1]] = cycle[0]
        saw_cycle = True
        pos = end + 1
    if not saw_cycle:
        raise InputError(f"no cycles found in {text!r}")
    return Permutation(images)


def parse_generator_text(text: str):
    """Parse the generator-file format: line 1 is "degree n"; each following
    non-empty, non-comment line is one generator in 1-indexed cycle notation."""
    lines = text.splitlines()
    degree = None
    gens = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise InputError(f"line {lineno}: expected 'degree n', got {raw!r}")
            degree = int(parts[1])
            if degree < 1:
                raise InputError(f"line {lineno}: degree must be positive")
            continue
        try:
            gens.append(parse_permutation(line, degree))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise InputError("missing 'degree n' header line")
    return degree, gens


def orbits(gens, domain):
    """Partition of the domain into connected components under generator moves.

    ``domain`` is an iterable of points or an int n meaning range(n).
    Components are listed by least element, each in BFS discovery order.
    """
    if isinstance(domain, int):
        points = list(range(domain))
    else:
        points = sorted(set(domain))
    seen = set()
    out = []
    for start in points:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        qpos = 0
        while qpos < len(comp):
            b = comp[qpos]
            qpos += 1
            for g in gens:
                c = g.images[b]
                if c not in seen:
                    seen.add(c)
                    comp.append(c)
        out.append(comp)
    return out


# ---------------------------------------------------------------------------
# stabilizer chain (deterministic Schreier-Sims, natural point order)
# ---------------------------------------------------------------------------

class _Level:
    __slots__ = ("base", "gens", "gen_keys", "orbit", "transversal", "processed", "stale")

    def __init__(self, base, degree):
        self.base = base
        self.gens = []          # strong generators whose first moved point is `base`
        self.gen_keys = set()
        self.orbit = [base]
        self.transversal = {base: Permutation.identity(degree)}
        self.processed = set()  # (orbit point, generator images) pairs already sifted
        self.stale = False


class StabilizerChain:
    """Deterministic Schreier-Sims with base points in natural point order.

    Strong generators are stored on the level of their first moved point, so
    level i's group is generated by the union of the generator lists at levels
    i and deeper, and it fixes every point below its base.  That property (and
    the strictly increasing bases) is what the canonical coset representative
    walk relies on.  Completion iterates Schreier-generator sifting to a
    fixpoint; orbits are recomputed whenever a union changes.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[_Level] = []

    @classmethod
    def build(cls, degree, generators):
        chain = cls(degree)
        for g in generators:
            chain._add_generator(g)
        chain._complete()
        return chain

    def _gens_from(self, idx: int):
        return [g for lv in self.levels[idx:] for g in lv.gens]

    def _refresh(self):
        for idx, lv in enumerate(self.levels):
            if lv.stale:
                self._recompute_orbit(idx)

    def _recompute_orbit(self, idx: int):
        lv = self.levels[idx]
        gens = self._gens_from(idx)
        orbit = [lv.base]
        transversal = {lv.base: Permutation.identity(self.degree)}
        qpos = 0
        while qpos < len(orbit):
            b = orbit[qpos]
            u = transversal[b]
            qpos += 1
            for s in gens:
                c = s.images[b]
                if c not in transversal:
                    transversal[c] = u * s
                    orbit.append(c)
        lv.orbit = orbit
        lv.transversal = transversal
        lv.stale = False

    def _add_generator(self, g: Permutation) -> bool:
        """Sift g and, when a nonzero residue remains, store it on the level of
        its first moved point; returns True when the chain grew."""
        self._refresh()
        r = self.sift(g)
        c = r.first_moved()
        if c is None:
            return False
        idx = 0
        while idx < len(self.levels) and self.levels[idx].base < c:
            idx += 1
        if idx == len(self.levels) or self.levels[idx].base > c:
            self.levels.insert(idx, _Level(c, self.degree))
        lv = self.levels[idx]
        if r.images in lv.gen_keys:
            return False
        lv.gens.append(r)
        lv.gen_keys.add(r.images)
        for j in range(idx + 1):
            self.levels[j].stale = True
        return True

    def _complete(self):
        while True:
            self._refresh()
            grew = False
            for idx in range(len(self.levels) - 1, -1, -1):
                lv = self.levels[idx]
                gens = self._gens_from(idx)
                for b in list(lv.orbit):
                    u = lv.transversal[b]
                    for s in gens:
                        key = (b, s.images)
                        if key in lv.processed:
                            continue
                        lv.processed.add(key)
                        schreier = (u * s) * lv.transversal[s.images[b]].inverse()
                        if self._add_generator(schreier):
                            grew = True
                            break
                    if grew:
                        break
                if grew:
                    break
            if not grew:
                return

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def base(self):
        return [lv.base for lv in self.levels]

    def sift(self, g: Permutation) -> Permutation:
        h = g
        for lv in self.levels:
            beta = h.images[lv.base]
            if beta == lv.base:
                continue
            u = lv.transversal.get(beta)
            if u is None:
                return h
            h = h * u.inverse()
        return h

    def contains(self, g: Permutation) -> bool:
        return self.sift(g).is_identity()

    def elements(self):
        """All group elements, one per transversal-product word; deterministic order."""

        def rec(idx):
            if idx == len(self.levels):
                yield Permutation.identity(self.degree)
                return
            for h in rec(idx + 1):
                for b in self.levels[idx].orbit:
                    yield h * self.levels[idx].transversal[b]

        yield from rec(0)

    def canonical_coset_rep(self, x: Permutation) -> Permutation:
        """The lexicographically least element of the right coset H*x, where H
        is the group of this chain.  Computed greedily level by level; within a
        level the minimizing orbit point is unique because x is a bijection."""
        cur = x
        for lv in self.levels:
            imgs = cur.images
            best = min(lv.orbit, key=imgs.__getitem__)
            if best != lv.base:
                cur = lv.transversal[best] * cur
        return cur


class PermutationGroup:
    """Group generated by permutations of a common degree; the stabilizer chain
    is built lazily on first use and frozen afterwards."""

    def __init__(self, degree: int, generators=()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise InputError("generator degree mismatch")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = None

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain.build(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise InputError("degree mismatch")
        return self.chain.contains(g)

    __contains__ = contains

    def orbit(self, point: int):
        return next(o for o in self.orbits() if point in o)

    def orbits(self):
        return orbits(self.generators, self.degree)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_trivial(self) -> bool:
        return not self.generators

    def point_stabilizer(self, alpha: int) -> "PermutationGroup":
        """Stabilizer of a point, generated by the Schreier generators of the
        orbit of alpha."""
        transversal = {alpha: Permutation.identity(self.degree)}
        orbit = [alpha]
        qpos = 0
        while qpos < len(orbit):
            b = orbit[qpos]
            qpos += 1
            for g in self.generators:
                c = g.images[b]
                if c not in transversal:
                    transversal[c] = transversal[b] * g
                    orbit.append(c)
        gens = []
        seen = set()
        for b in orbit:
            ub = transversal[b]
            for g in self.generators:
                s = (ub * g) * transversal[g.images[b]].inverse()
                if not s.is_identity() and s.images not in seen:
                    seen.add(s.images)
                    gens.append(s)
        return PermutationGroup(self.degree, gens)

    def elements(self, cap: int | None = ENUMERATION_ORDER_CAP):
        if cap is not None and self.order() > cap:
            raise InputError(f"group order {self.order()} exceeds enumeration cap {cap}")
        return list(self.chain.elements())

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, ngens={len(self.generators)})"


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ActionClassification:
    transitive: bool
    orbit_sizes: tuple[int, ...]
    subdegrees: tuple[int, ...] | None  # transitive case only
    rank: int
    half_transitive: bool
    three_halves_transitive: bool
    primitive: bool
    faithful: bool


def minimal_block(G: PermutationGroup, alpha: int, beta: int):
    """Smallest block of imprimitivity containing {alpha, beta} (union-find
    closure under the generators)."""
    n = G.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ra, rb = find(alpha), find(beta)
    if ra != rb:
        parent[rb] = ra
    queue = [(alpha, beta)]
    while queue:
        a, b = queue.pop()
        for g in G.generators:
            ga, gb = g.images[a], g.images[b]
            r1, r2 = find(ga), find(gb)
            if r1 != r2:
                parent[r2] = r1
                queue.append((ga, gb))
    root = find(alpha)
    return sorted(x for x in range(n) if find(x) == root)


def _is_primitive(G: PermutationGroup) -> bool:
    n = G.degree
    if n == 1:
        return True
    for beta in range(1, n):
        if len(minimal_block(G, 0, beta)) < n:
            return False
    return True


def classify_action(G: PermutationGroup, source_order: int | None = None) -> ActionClassification:
    orbs = G.orbits()
    orbit_sizes = tuple(sorted(len(o) for o in orbs))
    transitive = len(orbs) == 1
    half_transitive = len(set(orbit_sizes)) == 1
    order = G.order()
    rank = 0
    subdegrees = None
    for o in orbs:
        stab = G.point_stabilizer(o[0])
        stab_orbit_sizes = tuple(sorted(len(x) for x in stab.orbits()))
        rank += len(stab_orbit_sizes)
        if transitive:
            subdegrees = stab_orbit_sizes
    three_halves = False
    if transitive and order > G.degree and subdegrees is not None:
        rest = list(subdegrees)
        rest.remove(1)  # the fixed point {alpha}
        three_halves = len(set(rest)) == 1 and bool(rest)
    primitive = transitive and _is_primitive(G)
    faithful = source_order is None or source_order == order
    return ActionClassification(
        transitive=transitive,
        orbit_sizes=orbit_sizes,
        subdegrees=subdegrees,
        rank=rank,
        half_transitive=half_transitive,
        three_halves_transitive=three_halves,
        primitive=primitive,
        faithful=faithful,
    )


# ---------------------------------------------------------------------------
# derived actions
# ---------------------------------------------------------------------------

def action_on_ksubsets(G: PermutationGroup, k: int, cap: int = KSUBSET_DEGREE_CAP) -> PermutationGroup:
    """Induced action on k-subsets of the domain, ordered lexicographically."""
    n = G.degree
    if k > n:
        raise InputError("k exceeds the degree")
    subsets = list(combinations(range(n), k))
    if len(subsets) > cap:
        raise InputError(f"induced degree {len(subsets)} exceeds cap {cap}")
    index = {s: i for i, s in enumerate(subsets)}
    gens = []
    for g in G.generators:
        gens.append(Permutation(tuple(index[tuple(sorted(g.images[x] for x in s))] for s in subsets)))
    return PermutationGroup(len(subsets), gens)


def action_on_cosets(G: PermutationGroup, H: PermutationGroup, cap: int = COSET_INDEX_CAP) -> PermutationGroup:
    """Transitive action of G on the right cosets of H by right multiplication.

    Coset 0 is H itself.  Cosets are discovered breadth-first; each coset is
    keyed by its canonical representative, computed with H's stabilizer chain
    (Hx = Hy iff x*y^-1 in H iff the canonical representatives agree).
    """
    if H.degree != G.degree:
        raise InputError("degree mismatch between group and subgroup")
    for h in H.generators:
        if not G.contains(h):
            raise InputError("H is not a subgroup of G (generator fails membership)")
    canon = H.chain.canonical_coset_rep
    start = canon(Permutation.identity(G.degree))
    reps = [start]
    index = {start.images: 0}
    images = [[] for _ in G.generators]
    qpos = 0
    while qpos < len(reps):
        r = reps[qpos]
        qpos += 1
        for gi, g in enumerate(G.generators):
            z = canon(r * g)
            j = index.get(z.images)
            if j is None:
                j = len(reps)
                if j >= cap:
                    raise InputError(f"coset index exceeds cap {cap}")
                index[z.images] = j
                reps.append(z)
            images[gi].append(j)
    n_cosets = len(reps)
    if G.order() != n_cosets * H.order():
        raise VerificationError("coset enumeration inconsistent with group orders")
    return PermutationGroup(n_cosets, [Permutation(img) for img in images])


# ---------------------------------------------------------------------------
# normalizer / conjugate-intersection checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupChecks:
    normalizer_in_stabilizer: bool
    max_conjugate_intersection: int


def _closure(gens, degree):
    elems = [Permutation.identity(degree)]
    seen = {elems[0].images}
    qpos = 0
    while qpos < len(elems):
        x = elems[qpos]
        qpos += 1
        for g in gens:
            y = x * g
            if y.images not in seen:
                seen.add(y.images)
                elems.append(y)
    return elems, seen


def _sylow_subgroup(H_elements, p: int, degree: int):
    """A Sylow p-subgroup of the group given by its full element list, grown
    through normalizers (a proper p-subgroup has p | [N(P) : P])."""
    size = len(H_elements)
    target = 1
    while size % (target * p) == 0:
        target *= p
    gens = []
    P_elems, P_set = _closure(gens, degree)
    while len(P_elems) < target:
        progress = False
        for x in H_elements:
            if x.images in P_set:
                continue
            if any(z.conjugate(x).images not in P_set for z in gens):
                continue
            # order of the coset xP in N(P)/P
            j = 1
            y = x
            while y.images not in P_set:
                y = y * x
                j += 1
            if j % p == 0:
                gens.append(x ** (j // p))
                P_elems, P_set = _closure(gens, degree)
                progress = True
                break
        if not progress:
            raise VerificationError("Sylow subgroup construction stalled")
    return gens, P_set


def group_theoretic_checks(G: PermutationGroup, alpha: int, p: int,
                           cap: int = ENUMERATION_ORDER_CAP) -> GroupChecks:
    """With H the stabilizer of alpha and P a Sylow p-subgroup of H, decide
    whether the normalizer of P in G lies inside H, and compute the maximum of
    |H meet H^x| over x outside H.  Both by full element enumeration."""
    order = G.order()
    if order > cap:
        raise InputError(f"group order {order} exceeds enumeration cap {cap}")
    H = G.point_stabilizer(alpha)
    h_order = H.order()
    if h_order % p != 0:
        raise InputError("Sylow subgroup trivial: p does not divide the stabilizer order")
    H_elements = H.elements(cap=None)
    H_set = {h.images for h in H_elements}
    syl_gens, _p_set = _sylow_subgroup(H_elements, p, G.degree)
    G_elements = G.elements(cap=None)
    normalizer_inside = True
    for x in G_elements:
        if all(z.conjugate(x).images in _p_set for z in syl_gens):
            if x.images not in H_set:
                normalizer_inside = False
                break
    max_intersection = 0
    for x in G_elements:
        if x.images in H_set:
            continue
        x_inv = x.inverse()
        count = 0
        for h in H_elements:
            if ((x_inv * h) * x).images in H_set:
                count += 1
        if count > max_intersection:
            max_intersection = count
    return GroupChecks(normalizer_inside, max_intersection)

"""Concrete countable group families with decidable equality.

Four families are supported: free groups (reduced words), lattices Z^d
(integer vectors), finite groups (explicit multiplication tables), and
finite direct products of these.  Elements are immutable values in a unique
normal form, so ``==`` is exact equality in the group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .errors import (
    FamilyMismatchError,
    MalformedInputError,
    RelationError,
    UnsupportedSubgroupError,
)

FREE = "free"
LATTICE = "lattice"
FINITE = "finite"
PRODUCT = "direct-product"


@dataclass(frozen=True)
class GroupFamily:
    kind: str
    rank: int | None = None
    dim: int | None = None
    elements: tuple[str, ...] | None = None
    identity_label: str | None = None
    table: tuple[tuple[int, ...], ...] | None = None
    factors: tuple["GroupFamily", ...] | None = None

    def index_of(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise MalformedInputError(f"unknown element label {label!r}") from None

    def __repr__(self):
        if self.kind == FREE:
            return f"Free({self.rank})"
        if self.kind == LATTICE:
            return f"Z^{self.dim}"
        if self.kind == FINITE:
            return f"Finite({len(self.elements)})"
        return " x ".join(repr(f) for f in self.factors)


def free_group(rank: int) -> GroupFamily:
    if rank < 1 or rank > 26:
        raise MalformedInputError("free rank must be in 1..26 (letter encoding)")
    return GroupFamily(kind=FREE, rank=rank)


def lattice_group(dim: int) -> GroupFamily:
    if dim < 1:
        raise MalformedInputError("lattice dimension must be positive")
    return GroupFamily(kind=LATTICE, dim=dim)


def finite_group(elements: Iterable[str], identity: str, table: Iterable[Iterable[str]]) -> GroupFamily:
    """Build a finite family from a labeled multiplication table.

    The table is validated once: closure, a two-sided identity, inverses, and
    associativity over all triples.
    """
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise MalformedInputError("duplicate element labels")
    if identity not in elements:
        raise MalformedInputError("identity label not among elements")
    idx = {lab: i for i, lab in enumerate(elements)}
    rows = []
    for row in table:
        row = tuple(row)
        if len(row) != len(elements) or any(lab not in idx for lab in row):
            raise MalformedInputError("table row malformed or not closed")
        rows.append(tuple(idx[lab] for lab in row))
    if len(rows) != len(elements):
        raise MalformedInputError("table must be square")
    rows = tuple(rows)
    e = idx[identity]
    n = len(elements)
    for i in range(n):
        if rows[e][i] != i or rows[i][e] != i:
            raise MalformedInputError("identity is not two-sided")
    for i in range(n):
        if not any(rows[i][j] == e and rows[j][i] == e for j in range(n)):
            raise MalformedInputError(f"no inverse for {elements[i]!r}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                    raise MalformedInputError("table is not associative")
    return GroupFamily(kind=FINITE, elements=elements, identity_label=identity, table=rows)


def direct_product(*factors: GroupFamily) -> GroupFamily:
    if len(factors) < 2:
        raise MalformedInputError("direct product needs at least two factors")
    return GroupFamily(kind=PRODUCT, factors=tuple(factors))


@dataclass(frozen=True)
class GroupElement:
    family: GroupFamily
    word: Any

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return gp_mul(self, other)

    def inverse(self) -> "GroupElement":
        return gp_inv(self)

    def is_identity(self) -> bool:
        return self == identity(self.family)

    def __repr__(self):
        return f"<{element_text(self)}>"


def identity(family: GroupFamily) -> GroupElement:
    if family.kind == FREE:
        return GroupElement(family, ())
    if family.kind == LATTICE:
        return GroupElement(family, (0,) * family.dim)
    if family.kind == FINITE:
        return GroupElement(family, family.identity_label)
    return GroupElement(family, tuple(identity(f).word for f in family.factors))


def generator(family: GroupFamily, i: int, power: int = 1) -> GroupElement:
    """The i-th standard generator (0-based) of a free or lattice family."""
    if family.kind == FREE:
        if not 0 <= i < family.rank:
            raise MalformedInputError("generator index out of range")
        letter = (i + 1) if power >= 0 else -(i + 1)
        return GroupElement(family, (letter,) * abs(power)) if power else identity(family)
    if family.kind == LATTICE:
        if not 0 <= i < family.dim:
            raise MalformedInputError("generator index out of range")
        vec = [0] * family.dim
        vec[i] = power
        return GroupElement(family, tuple(vec))
    raise MalformedInputError(f"no standard generators for kind {family.kind}")


def lattice_element(family: GroupFamily, coords: Iterable[int]) -> GroupElement:
    coords = tuple(int(c) for c in coords)
    if family.kind != LATTICE or len(coords) != family.dim:
        raise MalformedInputError("bad lattice coordinates")
    return GroupElement(family, coords)


def finite_element(family: GroupFamily, label: str) -> GroupElement:
    family.index_of(label)
    return GroupElement(family, label)


def product_element(family: GroupFamily, *components: GroupElement) -> GroupElement:
    if family.kind != PRODUCT or len(components) != len(family.factors):
        raise MalformedInputError("component count mismatch")
    for comp, fac in zip(components, family.factors):
        if comp.family != fac:
            raise FamilyMismatchError("component from wrong factor family")
    return GroupElement(family, tuple(c.word for c in components))


def product_components(x: GroupElement) -> tuple[GroupElement, ...]:
    return tuple(GroupElement(f, w) for f, w in zip(x.family.factors, x.word))


def _free_reduce(word: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def gp_mul(x: GroupElement, y: GroupElement) -> GroupElement:
    if x.family != y.family:
        raise FamilyMismatchError(f"{x!r} and {y!r} live in different families")
    fam = x.family
    if fam.kind == FREE:
        return GroupElement(fam, _free_reduce(x.word + y.word))
    if fam.kind == LATTICE:
        return GroupElement(fam, tuple(a + b for a, b in zip(x.word, y.word)))
    if fam.kind == FINITE:
        i, j = fam.index_of(x.word), fam.index_of(y.word)
        return GroupElement(fam, fam.elements[fam.table[i][j]])
    comps = tuple(
        gp_mul(a, b).word
        for a, b in zip(product_components(x), product_components(y))
    )
    return GroupElement(fam, comps)


def gp_inv(x: GroupElement) -> GroupElement:
    fam = x.family
    if fam.kind == FREE:
        return GroupElement(fam, tuple(-letter for letter in reversed(x.word)))
    if fam.kind == LATTICE:
        return GroupElement(fam, tuple(-c for c in x.word))
    if fam.kind == FINITE:
        i = fam.index_of(x.word)
        e = fam.index_of(fam.identity_label)
        for j in range(len(fam.elements)):
            if fam.table[i][j] == e:
                return GroupElement(fam, fam.elements[j])
        raise AssertionError("validated table lost an inverse")
    return GroupElement(fam, tuple(gp_inv(c).word for c in product_components(x)))


def gp_pow(x: GroupElement, n: int) -> GroupElement:
    if n < 0:
        return gp_pow(gp_inv(x), -n)
    acc = identity(x.family)
    for _ in range(n):
        acc = gp_mul(acc, x)
    return acc


def ball(family: GroupFamily, generators: Iterable[GroupElement], radius: int) -> list[GroupElement]:
    """All products of at most ``radius`` of the listed generators.

    The result is deduplicated by normal form, contains the identity, and is
    returned in the canonical element order.
    """
    gens = list(generators)
    for g in gens:
        if g.family != family:
            raise FamilyMismatchError("generator from wrong family")
    seen = {identity(family)}
    frontier = list(seen)
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for g in gens:
                y = gp_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=element_sort_key)


def element_sort_key(x: GroupElement):
    fam = x.family
    if fam.kind == FREE:
        return (len(x.word), x.word)
    if fam.kind == LATTICE:
        return x.word
    if fam.kind == FINITE:
        return fam.index_of(x.word)
    return tuple(element_sort_key(c) for c in product_components(x))


# --- text encoding -----------------------------------------------------------

def element_text(x: GroupElement) -> str:
    """Round-trippable text form, per family.

    free: "a b A" with uppercase meaning inverse; identity is "".
    lattice: "(1,-2)".  finite: the label verbatim.  product: a JSON array of
    the component encodings.
    """
    fam = x.family
    if fam.kind == FREE:
        parts = []
        for letter in x.word:
            c = chr(ord("a") + abs(letter) - 1)
            parts.append(c.upper() if letter < 0 else c)
        return " ".join(parts)
    if fam.kind == LATTICE:
        return "(" + ",".join(str(c) for c in x.word) + ")"
    if fam.kind == FINITE:
        return x.word
    return json.dumps([element_text(c) for c in product_components(x)], separators=(",", ":"))


def parse_element(family: GroupFamily, text: str) -> GroupElement:
    if family.kind == FREE:
        word = []
        for tok in text.split():
            if len(tok) != 1 or not tok.isalpha():
                raise MalformedInputError(f"bad free-group token {tok!r}")
            i = ord(tok.lower()) - ord("a") + 1
            if i > family.rank:
                raise MalformedInputError(f"generator {tok!r} beyond rank {family.rank}")
            word.append(-i if tok.isupper() else i)
        return GroupElement(family, _free_reduce(word))
    if family.kind == LATTICE:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise MalformedInputError(f"bad lattice vector {text!r}")
        try:
            coords = tuple(int(c) for c in body[1:-1].split(","))
        except ValueError as exc:
            raise MalformedInputError(f"bad lattice vector {text!r}") from exc
        if len(coords) != family.dim:
            raise MalformedInputError(f"vector {text!r} has wrong dimension")
        return GroupElement(family, coords)
    if family.kind == FINITE:
        return finite_element(family, text)
    try:
        parts = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"bad product element {text!r}") from exc
    if not isinstance(parts, list) or len(parts) != len(family.factors):
        raise MalformedInputError(f"bad product element {text!r}")
    comps = [parse_element(f, p) for f, p in zip(family.factors, parts)]
    return product_element(family, *comps)


def family_to_json(family: GroupFamily) -> dict:
    if family.kind == FREE:
        return {"kind": "free", "rank": family.rank}
    if family.kind == LATTICE:
        return {"kind": "lattice", "dim": family.dim}
    if family.kind == FINITE:
        return {
            "kind": "finite",
            "elements": list(family.elements),
            "identity": family.identity_label,
            "table": [[family.elements[j] for j in row] for row in family.table],
        }
    return {"kind": "product", "factors": [family_to_json(f) for f in family.factors]}


def family_from_json(doc: dict) -> GroupFamily:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise MalformedInputError("group document needs a 'kind'")
    kind = doc["kind"]
    try:
        if kind == "free":
            return free_group(int(doc["rank"]))
        if kind == "lattice":
            return lattice_group(int(doc["dim"]))
        if kind == "finite":
            return finite_group(doc["elements"], doc["identity"], doc["table"])
        if kind == "product":
            return direct_product(*(family_from_json(f) for f in doc["factors"]))
    except KeyError as exc:
        raise MalformedInputError(f"group document missing field {exc}") from exc
    raise MalformedInputError(f"unknown group kind {kind!r}")


# --- subgroups ---------------------------------------------------------------

@dataclass(frozen=True)
class TrivialSubgroup:
    pass


@dataclass(frozen=True)
class ExplicitSubgroup:
    elements: tuple[GroupElement, ...]


@dataclass(frozen=True)
class SublatticeSubgroup:
    basis: tuple[tuple[int, ...], ...]


Subgroup = TrivialSubgroup | ExplicitSubgroup | SublatticeSubgroup


def explicit_subgroup(elements: Iterable[GroupElement]) -> ExplicitSubgroup:
    elts = tuple(elements)
    if not elts:
        raise MalformedInputError("explicit subgroup needs its elements listed")
    fam = elts[0].family
    pool = set(elts)
    if identity(fam) not in pool:
        raise MalformedInputError("explicit subgroup must contain the identity")
    for x in elts:
        if gp_inv(x) not in pool:
            raise MalformedInputError("explicit subgroup not closed under inverse")
        for y in elts:
            if gp_mul(x, y) not in pool:
                raise MalformedInputError("explicit subgroup not closed under product")
    return ExplicitSubgroup(tuple(sorted(pool, key=element_sort_key)))


def subgroup_member(x: GroupElement, sub: Subgroup) -> bool:
    if isinstance(sub, TrivialSubgroup):
        return x.is_identity()
    if isinstance(sub, ExplicitSubgroup):
        return x in set(sub.elements)
    if isinstance(sub, SublatticeSubgroup):
        if x.family.kind != LATTICE:
            raise UnsupportedSubgroupError("sublattice descriptor needs a lattice family")
        return _in_span(sub.basis, x.word)
    raise UnsupportedSubgroupError(f"unknown subgroup descriptor {sub!r}")


def subgroup_to_json(sub: Subgroup) -> dict:
    if isinstance(sub, TrivialSubgroup):
        return {"kind": "trivial"}
    if isinstance(sub, ExplicitSubgroup):
        return {"kind": "explicit", "elements": [element_text(x) for x in sub.elements]}
    return {"kind": "sublattice", "basis": [list(b) for b in sub.basis]}


def subgroup_from_json(family: GroupFamily, doc: dict) -> Subgroup:
    kind = doc.get("kind")
    if kind == "trivial":
        return TrivialSubgroup()
    if kind == "explicit":
        return explicit_subgroup(parse_element(family, t) for t in doc["elements"])
    if kind == "sublattice":
        return SublatticeSubgroup(tuple(tuple(int(c) for c in b) for b in doc["basis"]))
    raise MalformedInputError(f"unknown subgroup kind {kind!r}")


# --- integer linear algebra (membership and coset normal forms for lattices) -

def _in_span(basis: tuple[tuple[int, ...], ...], v: tuple[int, ...]) -> bool:
    snf = smith_form(basis, len(v))
    return snf.contains(v)


class smith_form:
    """Diagonalization D = U*A*V of the matrix whose columns are the basis
    vectors, with U, Uinv unimodular.  Supplies membership, a canonical coset
    representative, and enumeration of a finite quotient.
    """

    def __init__(self, basis: tuple[tuple[int, ...], ...], dim: int):
        cols = [list(b) for b in basis]
        for b in cols:
            if len(b) != dim:
                raise MalformedInputError("basis vector of wrong dimension")
        d, k = dim, len(cols)
        a = [[cols[j][i] for j in range(k)] for i in range(d)]
        u = [[int(i == j) for j in range(d)] for i in range(d)]
        uinv = [[int(i == j) for j in range(d)] for i in range(d)]

        def row_op(i, j, q):  # row_i -= q*row_j on A and U; col op on Uinv
            for c in range(k):
                a[i][c] -= q * a[j][c]
            for c in range(d):
                u[i][c] -= q * u[j][c]
            for r in range(d):
                uinv[r][j] += q * uinv[r][i]

        def col_op(i, j, q):  # col_i -= q*col_j on A
            for r in range(d):
                a[r][i] -= q * a[r][j]

        def row_swap(i, j):
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]
            for r in range(d):
                uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

        def col_swap(i, j):
            for r in range(d):
                a[r][i], a[r][j] = a[r][j], a[r][i]

        def row_negate(i):
            for c in range(k):
                a[i][c] = -a[i][c]
            for c in range(d):
                u[i][c] = -u[i][c]
            for r in range(d):
                uinv[r][i] = -uinv[r][i]

        t = 0
        while t < min(d, k):
            pr, pc = None, None
            best = None
            for i in range(t, d):
                for j in range(t, k):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best, pr, pc = abs(a[i][j]), i, j
            if best is None:
                break
            row_swap(t, pr)
            col_swap(t, pc)
            dirty = False
            for i in range(t + 1, d):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, k):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            if a[t][t] < 0:
                row_negate(t)
            t += 1

        self.dim = d
        self.diag = [a[i][i] for i in range(t)]
        self.u = u
        self.uinv = uinv

    def _apply(self, mat, v):
        return [sum(mat[i][j] * v[j] for j in range(self.dim)) for i in range(self.dim)]

    def contains(self, v: tuple[int, ...]) -> bool:
        w = self._apply(self.u, list(v))
        for i, di in enumerate(self.diag):
            if w[i] % di != 0:
                return False
        return all(w[i] == 0 for i in range(len(self.diag), self.dim))

    def reduce(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Canonical representative of v modulo the spanned lattice."""
        w = self._apply(self.u, list(v))
        for i, di in enumerate(self.diag):
            w[i] %= di
        return tuple(self._apply(self.uinv, w))

    def quotient_size(self) -> int | None:
        if len(self.diag) < self.dim:
            return None
        out = 1
        for di in self.diag:
            out *= di
        return out

    def representatives(self) -> list[tuple[int, ...]]:
        if self.quotient_size() is None:
            raise MalformedInputError("quotient is infinite; cannot enumerate")
        reps = []

        def rec(i, w):
            if i == self.dim:
                reps.append(tuple(self._apply(self.uinv, w)))
                return
            for c in range(self.diag[i]):
                rec(i + 1, w + [c])

        rec(0, [])
        return reps


# --- homomorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class Hom:
    """A homomorphism given by generator images.

    free source: one image per generator (no relations to check).
    lattice source: one image per basis vector; images must commute.
    finite source: an image for every element; multiplicativity is verified.
    """

    source: GroupFamily
    target: GroupFamily
    images: tuple[GroupElement, ...]

    def __post_init__(self):
        for img in self.images:
            if img.family != self.target:
                raise FamilyMismatchError("image from wrong family")
        if self.source.kind == FREE:
            if len(self.images) != self.source.rank:
                raise RelationError("need one image per free generator")
        elif self.source.kind == LATTICE:
            if len(self.images) != self.source.dim:
                raise RelationError("need one image per lattice basis vector")
            for i, a in enumerate(self.images):
                for b in self.images[i + 1:]:
                    if gp_mul(a, b) != gp_mul(b, a):
                        raise RelationError("lattice generator images must commute")
        elif self.source.kind == FINITE:
            if len(self.images) != len(self.source.elements):
                raise RelationError("need an image for every element")
            for i, x in enumerate(self.source.elements):
                for j, y in enumerate(self.source.elements):
                    xy = self.source.elements[self.source.table[i][j]]
                    lhs = self.images[self.source.index_of(xy)]
                    if lhs != gp_mul(self.images[i], self.images[j]):
                        raise RelationError("images are not multiplicative")
        else:
            raise RelationError("homomorphisms from product families are not supported")

    def apply(self, x: GroupElement) -> GroupElement:
        if x.family != self.source:
            raise FamilyMismatchError("element not from the hom's source")
        if self.source.kind == FREE:
            acc = identity(self.target)
            for letter in x.word:
                img = self.images[abs(letter) - 1]
                acc = gp_mul(acc, img if letter > 0 else gp_inv(img))
            return acc
        if self.source.kind == LATTICE:
            acc = identity(self.target)
            for c, img in zip(x.word, self.images):
                acc = gp_mul(acc, gp_pow(img, c))
            return acc
        return self.images[self.source.index_of(x.word)]


def identity_hom(family: GroupFamily) -> Hom:
    if family.kind == FREE:
        images = tuple(generator(family, i) for i in range(family.rank))
    elif family.kind == LATTICE:
        images = tuple(generator(family, i) for i in range(family.dim))
    elif family.kind == FINITE:
        images = tuple(GroupElement(family, lab) for lab in family.elements)
    else:
        raise RelationError("homomorphisms from product families are not supported")
    return Hom(family, family, images)


# Handy concrete groups used throughout the tests and the corpus.

def symmetric_group_table(n: int) -> GroupFamily:
    """S_n as an explicit table; labels are one-line permutation strings."""
    import itertools

    perms = list(itertools.permutations(range(n)))
    labels = ["".join(str(i) for i in p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            pq = tuple(p[q[i]] for i in range(n))
            row.append(labels[index[pq]])
        table.append(row)
    return finite_group(labels, labels[index[tuple(range(n))]], table)


def cyclic_group_table(n: int) -> GroupFamily:
    labels = [str(i) for i in range(n)]
    table = [[str((i + j) % n) for j in range(n)] for i in range(n)]
    return finite_group(labels, "0", table)

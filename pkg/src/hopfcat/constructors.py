"""Group algebras, enveloping algebras and their smash products.

All three kinds share one implementation: a basis index is a pair
``(exponents, g)`` of a PBW exponent vector over the Lie basis and a group
element id. ``K[G]`` is the case of the zero Lie algebra, ``U(L)`` the case
of the trivial group, and ``U(L) ⋊ K[G]`` the general one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .core import (
    DegreeOverflow,
    Element,
    HopfPresentation,
    Terms,
    ValidationError,
    Verdict,
    _add_into,
    format_linear,
)
from .exactlin import as_scalar

Vector = Dict[int, Fraction]
Word = Tuple[int, ...]
Monomial = Tuple[int, ...]

DEFAULT_DEGREE = 4


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group given by labels and a Cayley table of element ids."""

    labels: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    name: str = ""
    identity: int = field(init=False, compare=False)
    inverses: Tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)
        n = len(labels)
        if n == 0:
            raise ValidationError(f"group {self.name}: empty")
        if len(set(labels)) != n:
            raise ValidationError(f"group {self.name}: duplicate labels")
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError(f"group {self.name}: table is not {n}x{n}")
        for i, row in enumerate(table):
            if sorted(row) != list(range(n)):
                raise ValidationError(f"group {self.name}: row {labels[i]} is not a permutation", labels[i])
        for j in range(n):
            if sorted(table[i][j] for i in range(n)) != list(range(n)):
                raise ValidationError(f"group {self.name}: column {labels[j]} is not a permutation", labels[j])
        ids = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
        if not ids:
            raise ValidationError(f"group {self.name}: no identity element")
        e = ids[0]
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValidationError(
                    f"group {self.name}: associativity fails on ({labels[a]}, {labels[b]}, {labels[c]})",
                    (labels[a], labels[b], labels[c]),
                )
        inv = tuple(next(h for h in range(n) if table[g][h] == e) for g in range(n))
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverses", inv)

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"group {self.name}: unknown element {label}", label) from None

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows: Sequence[Sequence[str]], name: str = "") -> "FiniteGroup":
        pos = {lab: i for i, lab in enumerate(labels)}
        try:
            table = tuple(tuple(pos[x] for x in row) for row in rows)
        except KeyError as exc:
            raise ValidationError(f"group {name}: unknown element {exc.args[0]} in table", exc.args[0]) from None
        return cls(tuple(labels), table, name)


def trivial_group(name: str = "C1") -> FiniteGroup:
    return FiniteGroup(("e",), ((0,),), name)


def _wrap_keys(brackets: Mapping) -> Dict[Tuple[int, int], Vector]:
    return {(int(i), int(j)): {int(k): as_scalar(v) for k, v in vec.items() if as_scalar(v) != 0}
            for (i, j), vec in brackets.items()}


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra with ordered basis and structure constants.

    ``brackets`` maps ``(i, j)`` to the coordinates of ``[x_i, x_j]``; pairs
    may be given in either order and the antisymmetric partner is filled in.
    Construction fails if antisymmetry or the Jacobi identity is violated.
    """

    labels: Tuple[str, ...]
    brackets: Tuple[Tuple[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]], ...] = ()
    name: str = ""
    _table: Dict = field(init=False, compare=False, repr=False, hash=False)
    _straighten_cache: Dict = field(init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValidationError(f"lie {self.name}: duplicate basis labels")
        raw = self.brackets
        if isinstance(raw, Mapping):
            raw = tuple(raw.items())
        given = _wrap_keys(dict((tuple(k), dict(v)) for k, v in raw))
        table: Dict[Tuple[int, int], Vector] = {}
        for (i, j), vec in given.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in vec):
                raise ValidationError(f"lie {self.name}: bracket index out of range", (i, j))
            if i == j:
                if vec:
                    raise ValidationError(f"lie {self.name}: [{labels[i]}, {labels[i]}] must vanish", (i, i))
                continue
            neg = {k: -v for k, v in vec.items()}
            if (j, i) in table and table[(j, i)] != neg:
                raise ValidationError(
                    f"lie {self.name}: antisymmetry fails for ({labels[i]}, {labels[j]})", (labels[i], labels[j])
                )
            table[(i, j)] = dict(vec)
            table[(j, i)] = neg
        table = {k: v for k, v in table.items() if v}
        canon = tuple(sorted((k, tuple(sorted(v.items()))) for k, v in table.items() if k[0] < k[1]))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "brackets", canon)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_straighten_cache", {})
        bad = self.jacobi_violation()
        if bad is not None:
            i, j, k = bad
            raise ValidationError(
                f"lie {self.name}: Jacobi identity fails on ({labels[i]}, {labels[j]}, {labels[k]})",
                (labels[i], labels[j], labels[k]),
            )

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown basis label {label}", label) from None

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._table.get((i, j), {})

    def bracket(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Vector:
        acc: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                _add_into(acc, self.bracket_basis(i, j), a * b)
        return acc

    def jacobi_violation(self) -> Optional[Tuple[int, int, int]]:
        n = self.dim
        for i, j, k in itertools.combinations(range(n), 3):
            acc: Vector = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                _add_into(acc, self.bracket({a: Fraction(1)}, self.bracket_basis(b, c)))
            if acc:
                return (i, j, k)
        return None

    def format_vector(self, v: Mapping[int, Fraction]) -> str:
        return format_linear((c, self.labels[i]) for i, c in sorted(v.items()))

    def structure_constants(self) -> Dict[Tuple[int, int], Vector]:
        return {k: dict(v) for k, v in self._table.items()}

    def straighten(self, word: Sequence[int]) -> Dict[Monomial, Fraction]:
        """PBW normal form of a word, as exponent vector -> coefficient.

        The leftmost descent ``x_a x_b`` (a > b) is rewritten to
        ``x_b x_a + [x_a, x_b]``; each rewrite lowers the length or the
        inversion count, so the recursion terminates. Results are memoised.
        """
        word = tuple(word)
        cache = self._straighten_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if a > b:
                out: Dict[Monomial, Fraction] = dict(self.straighten(word[:p] + (b, a) + word[p + 2:]))
                for k, c in self.bracket_basis(a, b).items():
                    _add_into(out, self.straighten(word[:p] + (k,) + word[p + 2:]), c)
                break
        else:
            exps = [0] * self.dim
            for letter in word:
                exps[letter] += 1
            out = {tuple(exps): Fraction(1)}
        cache[word] = out
        return out


def abelian_lie(labels: Sequence[str], name: str = "") -> LieAlgebra:
    return LieAlgebra(tuple(labels), (), name)


def monomial_word(m: Monomial) -> Word:
    return tuple(i for i, a in enumerate(m) for _ in range(a))


def monomials_up_to(n: int, d: int) -> List[Monomial]:
    out = []
    for total in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(n), total):
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
    return out


def _apply_matrix(mat: Sequence[Vector], v: Mapping[int, Fraction]) -> Vector:
    acc: Vector = {}
    for i, c in v.items():
        _add_into(acc, mat[i], c)
    return acc


def _matmul(a: Sequence[Vector], b: Sequence[Vector]) -> List[Vector]:
    """Columns of the composite ``a ∘ b`` (column i = image of x_i)."""
    return [_apply_matrix(a, col) for col in b]


@dataclass(frozen=True)
class HopfAction:
    """Action of K[G] on U(L) through Lie automorphisms.

    ``images[g][i]`` holds the coordinates of ``g · x_i``.
    """

    group: FiniteGroup
    lie: LieAlgebra
    images: Tuple[Tuple[Tuple[Tuple[int, Fraction], ...], ...], ...]

    def __post_init__(self):
        imgs = tuple(
            tuple(tuple(sorted((int(k), as_scalar(v)) for k, v in dict(col).items() if as_scalar(v) != 0)) for col in cols)
            for cols in self.images
        )
        if len(imgs) != self.group.order or any(len(cols) != self.lie.dim for cols in imgs):
            raise ValidationError("action matrices have the wrong shape")
        object.__setattr__(self, "images", imgs)

    def matrix(self, g: int) -> List[Vector]:
        return [dict(col) for col in self.images[g]]

    @classmethod
    def trivial(cls, group: FiniteGroup, lie: LieAlgebra) -> "HopfAction":
        ident = tuple(((i, Fraction(1)),) for i in range(lie.dim))
        return cls(group, lie, tuple(ident for _ in range(group.order)))

    @classmethod
    def from_generators(cls, group: FiniteGroup, lie: LieAlgebra, gens: Mapping[str, Sequence[Mapping[int, Fraction]]]) -> "HopfAction":
        """Extend matrices given on generating elements to the whole group by
        closing under products; the first path found to each element wins and
        :func:`validate_action` catches any inconsistency."""
        ident = [{i: Fraction(1)} for i in range(lie.dim)]
        mats: Dict[int, List[Vector]] = {group.identity: ident}
        gen_mats = {group.index(lab): [dict(c) for c in m] for lab, m in gens.items()}
        for g, m in gen_mats.items():
            mats.setdefault(g, m)
        frontier = list(mats)
        while frontier:
            nxt = []
            for h in frontier:
                for g, m in gen_mats.items():
                    gh = group.mul(g, h)
                    if gh not in mats:
                        mats[gh] = _matmul(m, mats[h])
                        nxt.append(gh)
            frontier = nxt
        if len(mats) != group.order:
            raise ValidationError("action generators do not generate the group")
        return cls(group, lie, tuple(tuple(mats[g][i].items() for i in range(lie.dim)) for g in range(group.order)))


def validate_action(act: HopfAction) -> Verdict:
    """Check ρ(e) = id, ρ(gh) = ρ(g)ρ(h) and bracket preservation."""
    G, L = act.group, act.lie
    v = Verdict(subject="action")
    ident = [{i: Fraction(1)} for i in range(L.dim)]
    e_ok = act.matrix(G.identity) == ident
    v.add("identity acts trivially", e_ok, None if e_ok else G.labels[G.identity])

    witness = None
    for g, h in itertools.product(range(G.order), repeat=2):
        if act.matrix(G.mul(g, h)) != _matmul(act.matrix(g), act.matrix(h)):
            witness = f"({G.labels[g]}, {G.labels[h]})"
            break
    v.add("homomorphism", witness is None, witness)

    witness = detail = None
    for g in range(G.order):
        m = act.matrix(g)
        for i, j in itertools.combinations(range(L.dim), 2):
            lhs = _apply_matrix(m, L.bracket_basis(i, j))
            rhs = L.bracket(m[i], m[j])
            if lhs != rhs:
                witness = f"({G.labels[g]}, {L.labels[i]}, {L.labels[j]})"
                detail = (
                    f"ρ({G.labels[g]})[{L.labels[i]}, {L.labels[j]}] = {L.format_vector(lhs)} ≠ "
                    f"[ρ({G.labels[g]}){L.labels[i]}, ρ({G.labels[g]}){L.labels[j]}] = {L.format_vector(rhs)}"
                )
                break
        if witness:
            break
    v.add("bracket preserved", witness is None, witness, detail)
    return v


def _format_monomial(lie: LieAlgebra, m: Monomial) -> str:
    parts = []
    for i, a in enumerate(m):
        if a == 1:
            parts.append(lie.labels[i])
        elif a > 1:
            parts.append(f"{lie.labels[i]}^{a}")
    return "*".join(parts)


class StructuralPresentation(HopfPresentation):
    """``U(L) ⋊ K[G]`` with basis pairs ``(exponents, g)``.

    Multiplication: ``(a ⊗ g)(a' ⊗ g') = a (g · a') ⊗ g g'``; comultiplication
    is the tensor-product coalgebra; antipode
    ``S(a ⊗ g) = g⁻¹ · S(a) ⊗ g⁻¹``.
    """

    def __init__(self, kind: str, action: HopfAction, degree: int, name: str):
        if degree < 2:
            raise ValueError("truncation degree must be at least 2")
        super().__init__(name, degree)
        self.kind = kind
        self.action = action
        self.group = action.group
        self.lie = action.lie
        self._act_cache: Dict[Tuple[int, Word], Dict[Word, Fraction]] = {}
        self._zero = tuple([0] * self.lie.dim)
        self._mats = [action.matrix(g) for g in range(self.group.order)]
        self._trivial_action = all(
            self._mats[g] == [{i: Fraction(1)} for i in range(self.lie.dim)] for g in range(self.group.order)
        )

    def _basis_indices(self):
        return [(m, g) for g in range(self.group.order) for m in monomials_up_to(self.lie.dim, self.degree)]

    def index_degree(self, b):
        return sum(b[0])

    def sort_key(self, b):
        m, g = b
        return (g, sum(m), tuple(-a for a in m))

    def format_index(self, b):
        m, g = b
        mono = _format_monomial(self.lie, m)
        if self.kind == "GroupAlgebra" or (g != self.group.identity):
            glab = self.group.labels[g]
            return f"{mono}*{glab}" if mono else glab
        return mono or "1"

    # -- action of the group on words -------------------------------------
    def _act_word(self, g: int, word: Word) -> Dict[Word, Fraction]:
        if self._trivial_action or g == self.group.identity:
            return {word: Fraction(1)}
        key = (g, word)
        hit = self._act_cache.get(key)
        if hit is None:
            hit = {(): Fraction(1)}
            mat = self._mats[g]
            for letter in word:
                hit = {w + (k,): c * v for w, c in hit.items() for k, v in mat[letter].items()}
            self._act_cache[key] = hit
        return hit

    def _act_terms(self, g: int, terms: Mapping[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
        acc: Dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            for w, cw in self._act_word(g, monomial_word(m)).items():
                _add_into(acc, self.lie.straighten(w), c * cw)
        return acc

    # -- structure maps ---------------------------------------------------
    def _mul_basis(self, a, b):
        (m1, g1), (m2, g2) = a, b
        g = self.group.mul(g1, g2)
        prefix = monomial_word(m1)
        acc: Terms = {}
        for w, c in self._act_word(g1, monomial_word(m2)).items():
            for m, cm in self.lie.straighten(prefix + w).items():
                _add_into(acc, {(m, g): cm}, c)
        return acc

    def _delta_basis(self, b):
        m, g = b
        out = {}
        for split in itertools.product(*(range(a + 1) for a in m)):
            coef = 1
            for a, s in zip(m, split):
                coef *= comb(a, s)
            rest = tuple(a - s for a, s in zip(m, split))
            out[((split, g), (rest, g))] = Fraction(coef)
        return out

    def _eps_basis(self, b):
        return Fraction(1) if b[0] == self._zero else Fraction(0)

    def _antipode_basis(self, b):
        m, g = b
        word = monomial_word(m)
        sign = -1 if len(word) % 2 else 1
        s_a = {k: sign * v for k, v in self.lie.straighten(word[::-1]).items()}
        ginv = self.group.inv(g)
        return {(k, ginv): v for k, v in self._act_terms(ginv, s_a).items()}

    def _unit_terms(self):
        return {(self._zero, self.group.identity): Fraction(1)}

    # -- generators -------------------------------------------------------
    def lie_generator(self, i: int) -> Element:
        m = [0] * self.lie.dim
        m[i] = 1
        return Element(self, {(tuple(m), self.group.identity): 1})

    def group_generator(self, g: int) -> Element:
        return Element(self, {(self._zero, g): 1})

    def generator(self, label: str) -> Element:
        if label in self.lie.labels:
            return self.lie_generator(self.lie.labels.index(label))
        if label in self.group.labels:
            return self.group_generator(self.group.labels.index(label))
        raise ValidationError(f"{self.name}: unknown generator {label}", label)

    def generator_labels(self) -> List[str]:
        return list(self.lie.labels) + list(self.group.labels)

    def act(self, g: int, a: Element) -> Element:
        """``g · a`` for ``a`` in the ``U(L)`` leg (group leg must be e)."""
        self._own(a)
        terms = {}
        for (m, h), c in a.terms.items():
            if h != self.group.identity:
                raise ValidationError("act expects an element of U(L) ⊗ e")
            terms[m] = c
        return Element(self, {(k, self.group.identity): v for k, v in self._act_terms(g, terms).items()})


def group_algebra(G: FiniteGroup, d: int = DEFAULT_DEGREE, name: Optional[str] = None) -> StructuralPresentation:
    """``K[G]`` with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹."""
    empty = LieAlgebra((), (), "0")
    return StructuralPresentation("GroupAlgebra", HopfAction.trivial(G, empty), d, name or f"K[{G.name}]")


def enveloping(L: LieAlgebra, d: int = DEFAULT_DEGREE, name: Optional[str] = None) -> StructuralPresentation:
    """``U(L)`` on PBW monomials of degree <= d; products are straightened."""
    return StructuralPresentation("Enveloping", HopfAction.trivial(trivial_group(), L), d, name or f"U({L.name})")


def smash(act: HopfAction, d: int = DEFAULT_DEGREE, name: Optional[str] = None) -> StructuralPresentation:
    verdict = validate_action(act)
    if not verdict.passed:
        bad = verdict.failures()[0]
        raise ValidationError(f"invalid action: {bad.name} fails ({bad.detail or bad.witness})", bad.witness)
    label = name or f"U({act.lie.name})⋊K[{act.group.name}]"
    return StructuralPresentation("Smash", act, d, label)


def pbw_straighten(L: LieAlgebra, word: Sequence, H: Optional[StructuralPresentation] = None) -> Element:
    """PBW normal form of ``word`` (indices or labels) as an element of U(L).

    ``H`` is the enveloping presentation to own the result; when omitted one
    is built at degree ``max(2, len(word))``.
    """
    idx = tuple(L.index(w) if isinstance(w, str) else int(w) for w in word)
    if H is None:
        H = enveloping(L, max(DEFAULT_DEGREE if len(idx) <= DEFAULT_DEGREE else len(idx), 2))
    elif H.lie is not L and H.lie != L:
        raise ValidationError("presentation is not an enveloping algebra of this Lie algebra")
    if len(idx) > H.degree:
        raise DegreeOverflow(f"word of length {len(idx)} exceeds truncation d={H.degree}")
    e = H.group.identity
    return Element(H, {(m, e): c for m, c in L.straighten(idx).items()})

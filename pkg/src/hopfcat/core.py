"""Elements, structure maps and the axiom suite for presented Hopf algebras.

A presentation exposes its structure on basis indices only
(``_mul_basis``, ``_delta_basis``, ``_eps_basis``, ``_antipode_basis``);
everything else here is the linear extension of those maps plus the
bookkeeping for truncation at filtration degree ``d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .exactlin import as_scalar

BasisIndex = Hashable
Terms = Dict[BasisIndex, Fraction]


class HopfError(Exception):
    """Base class for every error raised by the library."""


class DegreeOverflow(HopfError):
    """An operation would leave the truncated filtration F_d."""


class OwnershipError(HopfError):
    """An element was used with a presentation that does not own it."""


class ValidationError(HopfError):
    """Input data violates a structural requirement; carries a witness."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class TruncationError(HopfError):
    """A construction does not close within F_d; raise the truncation degree."""


class UnsupportedKind(HopfError):
    pass


def _add_into(acc: Dict, terms: Mapping, scale: Fraction = Fraction(1)) -> Dict:
    for k, v in terms.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def format_linear(items: Iterable[Tuple[Fraction, str]]) -> str:
    """Render ``[(coef, label), ...]`` as ``2*x - 1/2*y + 3``."""
    parts: List[str] = []
    for coef, label in items:
        if label == "1":
            body = str(abs(coef))
        elif abs(coef) == 1:
            body = label
        else:
            body = f"{abs(coef)}*{label}"
        negative = coef < 0
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


class Element:
    """Finitely supported linear combination of basis indices of ``owner``.

    Treat as immutable: arithmetic returns fresh elements.
    """

    __slots__ = ("owner", "terms")

    def __init__(self, owner: "HopfPresentation", terms: Mapping[BasisIndex, Any] = ()):
        self.owner = owner
        clean: Terms = {}
        for k, v in dict(terms).items():
            v = as_scalar(v)
            if v:
                clean[k] = v
        self.terms = clean

    @property
    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(self.owner.index_degree(b) for b in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Element"):
        if not isinstance(other, Element) or other.owner is not self.owner:
            raise OwnershipError(f"element of {getattr(other, 'owner', None)} used with {self.owner}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.owner, _add_into(dict(self.terms), other.terms))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.owner, _add_into(dict(self.terms), other.terms, Fraction(-1)))

    def __neg__(self) -> "Element":
        return Element(self.owner, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.owner.multiply(self, other)
        c = as_scalar(other)
        return Element(self.owner, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.owner is other.owner and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.owner), frozenset(self.terms.items())))

    def sorted_terms(self) -> List[Tuple[BasisIndex, Fraction]]:
        key = self.owner.sort_key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def __str__(self) -> str:
        fmt = self.owner.format_index
        return format_linear((v, fmt(b)) for b, v in self.sorted_terms())

    def __repr__(self) -> str:
        return f"<{self.owner.name}: {self}>"


class TensorElement:
    """Linear combination over tuples of basis indices of ``owners``."""

    __slots__ = ("owners", "terms")

    def __init__(self, owners: Sequence["HopfPresentation"], terms: Mapping[Tuple, Any] = ()):
        self.owners = tuple(owners)
        clean = {}
        for k, v in dict(terms).items():
            v = as_scalar(v)
            if v:
                clean[tuple(k)] = v
        self.terms = clean

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.owners, _add_into(dict(self.terms), other.terms))

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.owners, _add_into(dict(self.terms), other.terms, Fraction(-1)))

    def _check(self, other):
        if not isinstance(other, TensorElement) or len(other.owners) != len(self.owners) or any(
            a is not b for a, b in zip(self.owners, other.owners)
        ):
            raise OwnershipError("tensor elements over different factors")

    def __mul__(self, other) -> "TensorElement":
        """Componentwise product in the tensor-power algebra, or a scalar multiple."""
        if not isinstance(other, TensorElement):
            c = as_scalar(other)
            return TensorElement(self.owners, {k: c * v for k, v in self.terms.items()})
        self._check(other)
        acc: Dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                partial = {(): v1 * v2}
                for H, a, b in zip(self.owners, k1, k2):
                    prod = H._mul_basis_checked(a, b)
                    partial = {t + (i,): c * w for t, c in partial.items() for i, w in prod.items()}
                _add_into(acc, partial)
        return TensorElement(self.owners, acc)

    def __rmul__(self, other) -> "TensorElement":
        return self.__mul__(other)

    def twist(self) -> "TensorElement":
        if len(self.owners) != 2:
            raise ValueError("twist is defined on tensor squares")
        return TensorElement(self.owners[::-1], {(b, a): v for (a, b), v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return len(self.owners) == len(other.owners) and all(
            a is b for a, b in zip(self.owners, other.owners)
        ) and self.terms == other.terms

    def __hash__(self):
        return hash((tuple(map(id, self.owners)), frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        keys = [H.sort_key for H in self.owners]
        fmts = [H.format_index for H in self.owners]
        items = sorted(self.terms.items(), key=lambda kv: tuple(k(i) for k, i in zip(keys, kv[0])))
        out = []
        for idx, v in items:
            label = " ⊗ ".join(f(i) for f, i in zip(fmts, idx))
            out.append((v, f"({label})" if abs(v) != 1 else label))
        parts: List[str] = []
        for coef, label in out:
            body = label if abs(coef) == 1 else f"{abs(coef)}*{label}"
            neg = coef < 0
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"<{'⊗'.join(H.name for H in self.owners)}: {self}>"


class HopfPresentation:
    """Abstract presented Hopf algebra truncated at filtration degree ``degree``.

    Subclasses provide the basis and the structure maps on basis indices.
    Basis-level results are memoised per presentation; the caches only ever
    grow and every entry is a pure function of its key.
    """

    kind: str = "abstract"

    def __init__(self, name: str, degree: int):
        if degree < 0:
            raise ValueError("truncation degree must be non-negative")
        self.name = name
        self.degree = degree
        self._mul_cache: Dict[Tuple, Terms] = {}
        self._delta_cache: Dict[BasisIndex, Dict] = {}
        self._antipode_cache: Dict[BasisIndex, Terms] = {}
        self._basis: Optional[List[BasisIndex]] = None
        self._basis_set: Optional[frozenset] = None

    # -- subclass hooks -------------------------------------------------
    def _basis_indices(self) -> List[BasisIndex]:
        raise NotImplementedError

    def index_degree(self, b: BasisIndex) -> int:
        raise NotImplementedError

    def _mul_basis(self, a: BasisIndex, b: BasisIndex) -> Terms:
        raise NotImplementedError

    def _delta_basis(self, b: BasisIndex) -> Dict[Tuple, Fraction]:
        raise NotImplementedError

    def _eps_basis(self, b: BasisIndex) -> Fraction:
        raise NotImplementedError

    def _antipode_basis(self, b: BasisIndex) -> Terms:
        raise NotImplementedError

    def _unit_terms(self) -> Terms:
        raise NotImplementedError

    def format_index(self, b: BasisIndex) -> str:
        return str(b)

    def sort_key(self, b: BasisIndex):
        return b

    def reduction_order(self) -> List[BasisIndex]:
        """Column order for degree-adapted echelon forms.

        Highest degree first, and within a degree the canonically largest
        index first, so pivots (the leading entries) carry the degree of their
        row and the canonically smallest indices survive as quotient
        representatives.
        """
        rank = {b: i for i, b in enumerate(self.basis)}
        return sorted(self.basis, key=lambda b: (-self.index_degree(b), -rank[b]))

    # -- basis ----------------------------------------------------------
    @property
    def basis(self) -> List[BasisIndex]:
        if self._basis is None:
            self._basis = sorted(self._basis_indices(), key=self.sort_key)
            self._basis_set = frozenset(self._basis)
        return self._basis

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_of_degree_at_most(self, k: int) -> List[BasisIndex]:
        return [b for b in self.basis if self.index_degree(b) <= k]

    def dims_by_degree(self) -> List[int]:
        return [len(self.basis_of_degree_at_most(k)) for k in range(self.degree + 1)]

    def has_index(self, b: BasisIndex) -> bool:
        self.basis
        return b in self._basis_set

    # -- elements -------------------------------------------------------
    def element(self, terms: Mapping[BasisIndex, Any] = ()) -> Element:
        for b in dict(terms):
            if not self.has_index(b):
                raise OwnershipError(f"{b!r} is not a basis index of {self.name}")
        return Element(self, terms)

    def basis_element(self, b: BasisIndex) -> Element:
        return self.element({b: 1})

    def one(self) -> Element:
        return Element(self, self._unit_terms())

    def zero(self) -> Element:
        return Element(self, {})

    def _own(self, a: Element):
        if not isinstance(a, Element) or a.owner is not self:
            raise OwnershipError(f"element not owned by {self.name}")

    # -- cached basis maps ----------------------------------------------
    def _mul_basis_checked(self, a: BasisIndex, b: BasisIndex) -> Terms:
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is None:
            if self.index_degree(a) + self.index_degree(b) > self.degree:
                raise DegreeOverflow(
                    f"{self.name}: product of degree {self.index_degree(a)} and "
                    f"{self.index_degree(b)} exceeds truncation d={self.degree}"
                )
            hit = self._mul_basis(a, b)
            self._mul_cache[key] = hit
        return hit

    def _delta_cached(self, b: BasisIndex) -> Dict[Tuple, Fraction]:
        hit = self._delta_cache.get(b)
        if hit is None:
            hit = self._delta_basis(b)
            self._delta_cache[b] = hit
        return hit

    def _antipode_cached(self, b: BasisIndex) -> Terms:
        hit = self._antipode_cache.get(b)
        if hit is None:
            hit = self._antipode_basis(b)
            self._antipode_cache[b] = hit
        return hit

    # -- structure maps -------------------------------------------------
    def multiply(self, a: Element, b: Element) -> Element:
        self._own(a)
        self._own(b)
        if a.degree + b.degree > self.degree:
            raise DegreeOverflow(
                f"{self.name}: product of degrees {a.degree}+{b.degree} exceeds truncation d={self.degree}"
            )
        acc: Terms = {}
        for i, u in a.terms.items():
            for j, v in b.terms.items():
                _add_into(acc, self._mul_basis_checked(i, j), u * v)
        return Element(self, acc)

    def comultiply(self, a: Element) -> TensorElement:
        self._own(a)
        acc: Dict = {}
        for i, u in a.terms.items():
            _add_into(acc, self._delta_cached(i), u)
        return TensorElement((self, self), acc)

    def counit(self, a: Element) -> Fraction:
        self._own(a)
        return sum((u * self._eps_basis(i) for i, u in a.terms.items()), Fraction(0))

    def antipode(self, a: Element) -> Element:
        self._own(a)
        acc: Terms = {}
        for i, u in a.terms.items():
            _add_into(acc, self._antipode_cached(i), u)
        return Element(self, acc)

    def power(self, a: Element, n: int) -> Element:
        out = self.one()
        for _ in range(n):
            out = self.multiply(out, a)
        return out

    def is_grouplike(self, a: Element) -> bool:
        return self.counit(a) == 1 and self.comultiply(a) == tensor(a, a)

    def is_primitive(self, a: Element) -> bool:
        one = self.one()
        return self.comultiply(a) == tensor(a, one) + tensor(one, a)

    def __repr__(self) -> str:
        return f"<{self.kind} {self.name} d={self.degree} dim={self.dimension}>"


def tensor(*elements: Element) -> TensorElement:
    acc: Dict = {(): Fraction(1)}
    for e in elements:
        acc = {k + (i,): c * v for k, c in acc.items() for i, v in e.terms.items()}
    return TensorElement(tuple(e.owner for e in elements), acc)


# -- module-level API ---------------------------------------------------

def multiply(H: HopfPresentation, a: Element, b: Element) -> Element:
    return H.multiply(a, b)


def comultiply(H: HopfPresentation, a: Element) -> TensorElement:
    return H.comultiply(a)


def counit(H: HopfPresentation, a: Element) -> Fraction:
    return H.counit(a)


def antipode(H: HopfPresentation, a: Element) -> Element:
    return H.antipode(a)


# -- verdicts -----------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[str] = None
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Verdict:
    """Structured pass/fail report. A failing verdict always has a witness."""

    subject: str
    checks: List[Check] = field(default_factory=list)
    degree: Optional[int] = None
    info: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Optional[str] = None, detail: Optional[str] = None) -> Check:
        if not passed and witness is None:
            witness = detail or name
        c = Check(name, bool(passed), witness, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Verdict", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"subject": self.subject, "passed": self.passed}
        if self.degree is not None:
            out["degree"] = self.degree
        out["checks"] = [c.to_dict() for c in self.checks]
        if self.info:
            out["info"] = self.info
        return out

    def __bool__(self) -> bool:
        return self.passed


# -- axiom suite --------------------------------------------------------

def _pairs_within(H: HopfPresentation, k: int = 2) -> Iterator[Tuple[BasisIndex, ...]]:
    """All k-tuples of basis indices with combined degree <= d."""
    by_deg: Dict[int, List[BasisIndex]] = {}
    for b in H.basis:
        by_deg.setdefault(H.index_degree(b), []).append(b)
    degs = sorted(by_deg)
    for combo in itertools.product(degs, repeat=k):
        if sum(combo) > H.degree:
            continue
        yield from itertools.product(*(by_deg[d] for d in combo))


def _fmt_tuple(H: HopfPresentation, idx: Sequence[BasisIndex]) -> str:
    return ", ".join(H.format_index(b) for b in idx)


def check_hopf_axioms(H: HopfPresentation) -> Verdict:
    """Verify the bialgebra and antipode axioms plus cocommutativity on F_d.

    Unary axioms run over every basis element; multiplicativity over all
    pairs and associativity over all triples of combined degree <= d.
    The first failure in canonical order is reported as the witness.
    """
    v = Verdict(subject=H.name, degree=H.degree)
    basis = H.basis
    one = H.one()
    elem = H.basis_element

    def first(items, pred):
        for it in items:
            ok, msg = pred(it)
            if not ok:
                return it, msg
        return None, None

    # associativity
    def assoc(t):
        a, b, c = (elem(i) for i in t)
        lhs, rhs = (a * b) * c, a * (b * c)
        return lhs == rhs, f"(ab)c = {lhs}, a(bc) = {rhs}"

    bad, msg = first(_pairs_within(H, 3), assoc)
    v.add("associativity", bad is None, bad and _fmt_tuple(H, bad), msg)

    def unit(b):
        x = elem(b)
        return one * x == x and x * one == x, f"1*{x} = {one * x}, {x}*1 = {x * one}"

    bad, msg = first(basis, unit)
    v.add("unit", bad is None, bad and H.format_index(bad), msg)

    def coassoc(b):
        d = H._delta_cached(b)
        left: Dict = {}
        right: Dict = {}
        for (x, y), c in d.items():
            for (x1, x2), c1 in H._delta_cached(x).items():
                _add_into(left, {(x1, x2, y): c * c1})
            for (y1, y2), c2 in H._delta_cached(y).items():
                _add_into(right, {(x, y1, y2): c * c2})
        return left == right, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ"

    bad, msg = first(basis, coassoc)
    v.add("coassociativity", bad is None, bad and H.format_index(bad), msg)

    def counit_law(b):
        left: Dict = {}
        right: Dict = {}
        for (x, y), c in H._delta_cached(b).items():
            _add_into(left, {y: c * H._eps_basis(x)})
            _add_into(right, {x: c * H._eps_basis(y)})
        return left == {b: 1} and right == {b: 1}, "(ε⊗id)Δ or (id⊗ε)Δ differs from id"

    bad, msg = first(basis, counit_law)
    v.add("counit", bad is None, bad and H.format_index(bad), msg)

    def delta_mult(t):
        a, b = (elem(i) for i in t)
        lhs = H.comultiply(a * b)
        rhs = H.comultiply(a) * H.comultiply(b)
        return lhs == rhs, f"Δ(ab) = {lhs}, Δ(a)Δ(b) = {rhs}"

    unit_ok = H.comultiply(one) == tensor(one, one)
    bad, msg = first(_pairs_within(H, 2), delta_mult)
    if not unit_ok:
        bad, msg = ("1",), "Δ(1) ≠ 1⊗1"
        v.add("delta multiplicative", False, "1", msg)
    else:
        v.add("delta multiplicative", bad is None, bad and _fmt_tuple(H, bad), msg)

    def eps_mult(t):
        a, b = (elem(i) for i in t)
        lhs, rhs = H.counit(a * b), H.counit(a) * H.counit(b)
        return lhs == rhs, f"ε(ab) = {lhs}, ε(a)ε(b) = {rhs}"

    if H.counit(one) != 1:
        v.add("epsilon multiplicative", False, "1", "ε(1) ≠ 1")
    else:
        bad, msg = first(_pairs_within(H, 2), eps_mult)
        v.add("epsilon multiplicative", bad is None, bad and _fmt_tuple(H, bad), msg)

    def antipode_law(b):
        left: Terms = {}
        right: Terms = {}
        for (x, y), c in H._delta_cached(b).items():
            sx = H.antipode(elem(x))
            sy = H.antipode(elem(y))
            _add_into(left, H.multiply(sx, elem(y)).terms, c)
            _add_into(right, H.multiply(elem(x), sy).terms, c)
        target = (one * H._eps_basis(b)).terms
        lhs = Element(H, left)
        return left == target and right == target, f"M(S⊗id)Δ = {lhs}, uε = {Element(H, target)}"

    bad, msg = first(basis, antipode_law)
    v.add("antipode", bad is None, bad and H.format_index(bad), msg)

    def cocomm(b):
        d = H._delta_cached(b)
        return {(y, x): c for (x, y), c in d.items()} == d, "σΔ ≠ Δ"

    bad, msg = first(basis, cocomm)
    v.add("cocommutativity", bad is None, bad and H.format_index(bad), msg)
    return v


# -- structure-constant presentations --------------------------------------

class TablePresentation(HopfPresentation):
    """Hopf algebra given by explicit structure-constant tables.

    Basis indices are ``0..n-1`` with display ``labels``; ``degrees`` gives
    the filtration degree of each basis vector. Products of pairs whose
    degrees sum past ``degree`` are undefined (missing entries within range
    mean a zero product).
    """

    kind = "StructureConstants"

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        degrees: Sequence[int],
        unit: Mapping[int, Any],
        mul: Mapping[Tuple[int, int], Mapping[int, Any]],
        delta: Mapping[int, Mapping[Tuple[int, int], Any]],
        counit: Sequence[Any],
        antipode: Mapping[int, Mapping[int, Any]],
        degree: int,
        grouplikes: Optional[Sequence[Mapping[int, Any]]] = None,
        origin: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(name, degree)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValidationError(f"{name}: duplicate basis labels")
        if len(degrees) != n or len(counit) != n:
            raise ValidationError(f"{name}: degree/counit tables have wrong length")

        def check_idx(i):
            if not (isinstance(i, int) and 0 <= i < n):
                raise ValidationError(f"{name}: basis index {i!r} out of range", witness=i)
            return i

        def clean(terms):
            return {check_idx(k): as_scalar(v) for k, v in terms.items() if as_scalar(v) != 0}

        self.labels = list(labels)
        self.degrees = [int(x) for x in degrees]
        self._unit = clean(unit)
        self._mul = {(check_idx(a), check_idx(b)): clean(t) for (a, b), t in mul.items()}
        self._delta = {
            check_idx(i): {(check_idx(a), check_idx(b)): as_scalar(v) for (a, b), v in t.items() if as_scalar(v) != 0}
            for i, t in delta.items()
        }
        self._counit = [as_scalar(x) for x in counit]
        self._anti = {check_idx(i): clean(t) for i, t in antipode.items()}
        self.declared_grouplikes = [clean(g) for g in grouplikes] if grouplikes else None
        self.origin = origin or {}

    def _basis_indices(self):
        return list(range(len(self.labels)))

    def index_degree(self, b):
        return self.degrees[b]

    def _mul_basis(self, a, b):
        return dict(self._mul.get((a, b), {}))

    def _delta_basis(self, b):
        return dict(self._delta.get(b, {}))

    def _eps_basis(self, b):
        return self._counit[b]

    def _antipode_basis(self, b):
        return dict(self._anti.get(b, {}))

    def _unit_terms(self):
        return dict(self._unit)

    def format_index(self, b):
        return self.labels[b]

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"{self.name}: unknown basis label {label}", witness=label) from None


def to_table(H: HopfPresentation, name: Optional[str] = None, **overrides) -> TablePresentation:
    """Tabulate every structure map of ``H`` on F_d.

    Keyword overrides replace whole tables (``antipode={...}`` etc.), which is
    how corrupted presentations for negative tests are produced.
    """
    basis = H.basis
    pos = {b: i for i, b in enumerate(basis)}
    labels = [H.format_index(b) for b in basis]
    degrees = [H.index_degree(b) for b in basis]
    mul = {}
    for a, b in _pairs_within(H, 2):
        mul[(pos[a], pos[b])] = {pos[k]: v for k, v in H._mul_basis_checked(a, b).items()}
    delta = {pos[b]: {(pos[x], pos[y]): v for (x, y), v in H._delta_cached(b).items()} for b in basis}
    counit_ = [H._eps_basis(b) for b in basis]
    anti = {pos[b]: {pos[k]: v for k, v in H._antipode_cached(b).items()} for b in basis}
    unit = {pos[k]: v for k, v in H._unit_terms().items()}
    data = dict(
        labels=labels, degrees=degrees, unit=unit, mul=mul, delta=delta, counit=counit_, antipode=anti
    )
    data.update(overrides)
    return TablePresentation(name or H.name, degree=H.degree, **data)

"""Hopf kernels and cokernels, factorization and the diagram checkers.

Everything is computed degree-wise on F_d with exact linear algebra:

* ``HKer(f) = {a : a₁ ⊗ f(a₂) = a ⊗ 1}``, a nullspace problem;
* ``HCoker(i) = A / A·(HKer)⁺·A``, a quotient by a span of triple products;
* the regular epi / mono factorization ``f = m ∘ p`` through that quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .constructors import FiniteGroup, StructuralPresentation
from .core import (
    Element,
    HopfPresentation,
    TablePresentation,
    TruncationError,
    UnsupportedKind,
    ValidationError,
    Verdict,
    _add_into,
)
from .exactlin import NoSolution, SparseMatrix, Subspace, nullspace
from .functors import SplitSES, grouplikes, primitives
from .morphisms import (
    HopfMorphism,
    compose,
    make_morphism,
    morphism_failure,
    zero_morphism,
)


# -- sub-presentations and quotients ----------------------------------------

def _unique_labels(raw: Sequence[Optional[str]], prefix: str) -> List[str]:
    out: List[str] = []
    for k, lab in enumerate(raw):
        out.append(lab if lab and lab not in out else f"{prefix}{k}")
    return out


def subpresentation(H: HopfPresentation, vectors, name: str) -> Tuple[TablePresentation, HopfMorphism]:
    """Tabulate the Hopf subalgebra spanned by ``vectors`` (dicts over H's basis).

    The basis is the reduced echelon basis in :meth:`reduction_order`, so
    each basis vector has the degree of its leading index and the basis is
    adapted to the filtration. Raises :class:`TruncationError` if the span is
    not closed under the structure maps within F_d.
    """
    span = Subspace(H.reduction_order(), vectors)
    rows = span.basis()
    pivots = span.pivot_keys()
    degs = [H.index_degree(p) for p in pivots]
    rank = {b: i for i, b in enumerate(H.basis)}
    order = sorted(range(len(rows)), key=lambda r: (degs[r], rank[pivots[r]]))
    reps = [H.element(rows[r]) for r in order]
    degrees = [degs[r] for r in order]
    piv = [pivots[r] for r in order]
    n = len(reps)

    def coords(vec: Dict, what: str) -> Dict[int, Fraction]:
        try:
            raw = span.coordinates(vec)
        except NoSolution:
            raise TruncationError(f"{name}: span is not closed under {what} within d={H.degree}") from None
        by_pivot = {p: c for p, c in zip(pivots, raw)}
        return {j: by_pivot[piv[j]] for j in range(n) if by_pivot.get(piv[j])}

    mul = {}
    for a in range(n):
        for b in range(n):
            if degrees[a] + degrees[b] <= H.degree:
                mul[(a, b)] = coords(H.multiply(reps[a], reps[b]).terms, "multiplication")
    pos = {p: j for j, p in enumerate(piv)}
    delta = {}
    for j, x in enumerate(reps):
        t = H.comultiply(x).terms
        guess = {}
        for (u, v), c in t.items():
            if u in pos and v in pos:
                guess[(pos[u], pos[v])] = c
        rebuilt: Dict = {}
        for (a, b), c in guess.items():
            for u, cu in reps[a].terms.items():
                for v, cv in reps[b].terms.items():
                    _add_into(rebuilt, {(u, v): c * cu * cv})
        if rebuilt != t:
            raise TruncationError(f"{name}: span is not a subcoalgebra within d={H.degree}")
        delta[j] = guess
    counit = [H.counit(x) for x in reps]
    anti = {j: coords(H.antipode(x).terms, "the antipode") for j, x in enumerate(reps)}
    unit = coords(H.one().terms, "the unit")
    raw_labels = []
    for x in reps:
        lab = None
        if len(x.terms) == 1:
            (b, c), = x.terms.items()
            if c == 1:
                lab = H.format_index(b)
        raw_labels.append(lab)
    labels = _unique_labels(raw_labels, "k")
    sub = TablePresentation(
        name, labels, degrees, unit, mul, delta, counit, anti, H.degree,
        origin={"kind": "subalgebra", "of": H.name, "basis": [str(x) for x in reps]},
    )
    inclusion = HopfMorphism.from_basis_images(sub, H, {j: reps[j] for j in range(n)}, name=f"incl_{name}")
    return sub, inclusion


@dataclass
class HopfKernel:
    sub: TablePresentation
    inclusion: HopfMorphism
    dims: List[int]

    @property
    def elements(self) -> List[Element]:
        return [self.inclusion.images[j] for j in self.sub.basis]


def hkernel(f: HopfMorphism, name: str = "") -> HopfKernel:
    """Hopf kernel of ``f`` on F_d: solutions of ``a₁ ⊗ f(a₂) = a ⊗ 1``."""
    A, B = f.source, f.target
    basis = A.basis
    one_b = B.one()
    rows: Dict[Tuple, Dict[int, Fraction]] = {}
    for j, a in enumerate(basis):
        col: Dict = {}
        for (a1, a2), c in A._delta_cached(a).items():
            for t, v in f.images[a2].terms.items():
                _add_into(col, {(a1, t): c * v})
        for t, v in one_b.terms.items():
            _add_into(col, {(a, t): -v})
        for key, v in col.items():
            rows.setdefault(key, {})[j] = v
    m = SparseMatrix.from_rows(list(rows.values()), len(basis))
    vectors = [{basis[j]: v for j, v in enumerate(vec) if v} for vec in nullspace(m)]
    sub, incl = subpresentation(A, vectors, name or f"HKer({f.name})")
    return HopfKernel(sub, incl, sub.dims_by_degree())


@dataclass
class HopfCokernel:
    quotient: TablePresentation
    projection: HopfMorphism
    ideal: Subspace = field(repr=False)
    ideal_dims: List[int] = field(default_factory=list)


def two_sided_ideal(A: HopfPresentation, generators: Sequence[Element]) -> Subspace:
    """``span{a·k·c}`` within F_d, built as A·(span{k·c})."""
    d = A.degree
    order = A.reduction_order()
    right = Subspace(order)
    for k in generators:
        if k.is_zero():
            continue
        for c in A.basis:
            if k.degree + A.index_degree(c) <= d:
                right.add(A.multiply(k, A.basis_element(c)).terms)
    ideal = Subspace(order)
    for r in right.basis():
        r = A.element(r)
        for a in A.basis:
            if A.index_degree(a) + r.degree <= d:
                ideal.add(A.multiply(A.basis_element(a), r).terms)
    return ideal


def _dims_by_degree(A: HopfPresentation, space: Subspace) -> List[int]:
    degs = [A.index_degree(p) for p in space.pivot_keys()]
    return [sum(1 for x in degs if x <= k) for k in range(A.degree + 1)]


def hcokernel(i: HopfMorphism, name: str = "") -> HopfCokernel:
    """``A / A·(im i)⁺·A`` with its induced Hopf structure and projection."""
    A = i.target
    name = name or f"HCoker({i.name})"
    one = A.one()
    aug = []
    for b in i.source.basis:
        x = i.images[b]
        aug.append(x - one * A.counit(x))
    ideal = two_sided_ideal(A, aug)
    d = A.degree
    pivots = set(ideal.pivot_keys())
    reps = [b for b in A.basis if b not in pivots]
    pos = {b: j for j, b in enumerate(reps)}

    def proj(terms) -> Dict[int, Fraction]:
        return {pos[k]: v for k, v in ideal.reduce(terms).items()}

    # the ideal must be a Hopf ideal within F_d
    for r in ideal.basis():
        r_el = A.element(r)
        if A.counit(r_el) != 0:
            raise TruncationError(f"{name}: ideal meets the counit; raise d")
        tens: Dict = {}
        for (u, v), c in A.comultiply(r_el).terms.items():
            for pu, cu in proj({u: 1}).items():
                for pv, cv in proj({v: 1}).items():
                    _add_into(tens, {(pu, pv): c * cu * cv})
        if tens:
            raise TruncationError(f"{name}: comultiplication does not descend within d={d}")
        if proj(A.antipode(r_el).terms):
            raise TruncationError(f"{name}: antipode does not descend within d={d}")
        for a in A.basis:
            if A.index_degree(a) + r_el.degree <= d:
                x = A.basis_element(a)
                if proj(A.multiply(x, r_el).terms) or proj(A.multiply(r_el, x).terms):
                    raise TruncationError(f"{name}: ideal is not two-sided within d={d}")

    degrees = [A.index_degree(b) for b in reps]
    mul = {}
    for a, b in itertools.product(range(len(reps)), repeat=2):
        if degrees[a] + degrees[b] <= d:
            mul[(a, b)] = proj(A._mul_basis_checked(reps[a], reps[b]))
    delta = {}
    for j, b in enumerate(reps):
        tens: Dict = {}
        for (u, v), c in A._delta_cached(b).items():
            for pu, cu in proj({u: 1}).items():
                for pv, cv in proj({v: 1}).items():
                    _add_into(tens, {(pu, pv): c * cu * cv})
        delta[j] = tens
    counit = [A._eps_basis(b) for b in reps]
    anti = {j: proj(A._antipode_cached(b)) for j, b in enumerate(reps)}
    unit = proj(A._unit_terms())
    labels = _unique_labels([A.format_index(b) for b in reps], "q")
    Q = TablePresentation(
        name, labels, degrees, unit, mul, delta, counit, anti, d,
        origin={"kind": "quotient", "of": A.name, "representatives": [A.format_index(b) for b in reps]},
    )
    images = {b: Element(Q, proj({b: 1})) for b in A.basis}
    p = HopfMorphism.from_basis_images(A, Q, images, name=f"π_{name}")
    return HopfCokernel(Q, p, ideal, _dims_by_degree(A, ideal))


# -- factorization ----------------------------------------------------------

def graded_dims(dims: Sequence[int]) -> List[int]:
    """``dim F_k − dim F_{k−1}`` from the cumulative ``dim F_k`` list."""
    return [d - (dims[k - 1] if k else 0) for k, d in enumerate(dims)]


def linear_kernel_dims(f: HopfMorphism) -> List[int]:
    """``dim (ker f ∩ F_k)`` for k = 0..d."""
    a = f.analyze()
    return [s - r for s, r in zip(a.source_dims, a.image_dims)]


@dataclass
class Factorization:
    f: HopfMorphism
    p: Optional[HopfMorphism]
    m: Optional[HopfMorphism]
    kernel: Optional[HopfKernel]
    cokernel: Optional[HopfCokernel]
    verdict: Verdict


def factorize(f: HopfMorphism) -> Factorization:
    """Regular epi / mono factorization ``f = m ∘ p`` through ``HCoker(HKer f)``.

    If ``f`` is not a Hopf morphism on F_d nothing is factored: the verdict
    fails with the violated law and ``p``, ``m`` are None.
    """
    bad = morphism_failure(f)
    if bad is not None:
        v = Verdict(subject=f"factorize({f.name})", degree=f.source.degree)
        v.add("f is a Hopf morphism", False, bad[1], bad[0])
        return Factorization(f, None, None, None, None, v)
    K = hkernel(f)
    C = hcokernel(K.inclusion, name=f"Im({f.name})")
    Q = C.quotient
    reps = Q.origin["representatives"]
    lookup = {f.source.format_index(b): b for b in f.source.basis}
    m_images = {j: f.images[lookup[r]] for j, r in enumerate(reps)}
    m = HopfMorphism.from_basis_images(Q, f.target, m_images, name=f"m_{f.name}")
    p = C.projection
    v = Verdict(subject=f"factorize({f.name})", degree=f.source.degree)
    mp = compose(m, p)
    bad = mp.equals_on_basis(f)
    v.add("m∘p = f", bad is None, None if bad is None else f.source.format_index(bad))
    pa, ma, fa = p.analyze(), m.analyze(), f.analyze()
    v.add("p surjective at d", pa.surjective, None if pa.surjective else f"image dims {pa.image_dims}")
    v.add("m injective at d", ma.injective, None if ma.injective else f"image dims {ma.image_dims}")
    ranks_ok = ma.image_dims == fa.image_dims
    v.add("rank(m) = rank(f) per degree", ranks_ok, None if ranks_ok else f"{ma.image_dims} vs {fa.image_dims}")
    ker = linear_kernel_dims(f)
    ok = ker == C.ideal_dims
    v.add("ker f = A(HKer f)⁺A per degree", ok, None if ok else f"{ker} vs {C.ideal_dims}")
    v.info = {"kernel_dims": ker, "kernel_graded_dims": graded_dims(ker),
              "ideal_dims": C.ideal_dims, "ideal_graded_dims": graded_dims(C.ideal_dims),
              "hker_dims": K.dims, "image_dims": fa.image_dims}
    return Factorization(f, p, m, K, C, v)


# -- split short exact sequences ----------------------------------------------

def check_ses(s: SplitSES) -> Verdict:
    """All split-short-exact-sequence invariants at the truncation degree."""
    v = Verdict(subject=s.name or f"{s.A.name}→{s.H.name}→{s.B.name}", degree=s.H.degree)
    valid = True
    for label, f in (("i", s.i), ("p", s.p), ("s", s.s)):
        bad = morphism_failure(f)
        v.add(f"{label} is a Hopf morphism", bad is None, None if bad is None else bad[1],
              None if bad is None else bad[0])
        valid = valid and bad is None
    B, A = s.B, s.A
    bad = next((b for b in B.basis if s.p.apply(s.s.images[b]) != B.basis_element(b)), None)
    v.add("p∘s = id", bad is None, None if bad is None else B.format_index(bad))
    one = B.one()
    bad = next((a for a in A.basis if s.p.apply(s.i.images[a]) != one * A._eps_basis(a)), None)
    v.add("p∘i = 0", bad is None, None if bad is None else A.format_index(bad))
    ia, pa = s.i.analyze(), s.p.analyze()
    v.add("i injective at d", ia.injective, None if ia.injective else f"image dims {ia.image_dims}")
    v.add("p surjective at d", pa.surjective, None if pa.surjective else f"image dims {pa.image_dims}")
    if valid:
        K = hkernel(s.p)
        kernel_span = Subspace(s.H.basis, (x.terms for x in K.elements))
        missing = next((a for a in A.basis if not kernel_span.contains(s.i.images[a].terms)), None)
        same = missing is None and K.dims == ia.image_dims
        witness = None
        if not same:
            witness = A.format_index(missing) if missing is not None else f"HKer dims {K.dims} vs im(i) dims {ia.image_dims}"
        v.add("HKer(p) = im(i)", same, witness)
    else:
        v.add("HKer(p) = im(i)", False, "arrows are not morphisms", "skipped")
    return v


@dataclass
class SplitSESMorphismDiagram:
    top: SplitSES
    bottom: SplitSES
    h_A: HopfMorphism
    h: HopfMorphism
    h_B: HopfMorphism
    name: str = ""


def diagram_commutes(dg: SplitSESMorphismDiagram) -> Verdict:
    t, b = dg.top, dg.bottom
    v = Verdict(subject=dg.name or "diagram", degree=t.H.degree)
    for label, src, lhs, rhs in (
        ("h∘i1 = i2∘h_A", t.A, lambda x: dg.h.apply(t.i.apply(x)), lambda x: b.i.apply(dg.h_A.apply(x))),
        ("p2∘h = h_B∘p1", t.H, lambda x: b.p.apply(dg.h.apply(x)), lambda x: dg.h_B.apply(t.p.apply(x))),
        ("h∘s1 = s2∘h_B", t.B, lambda x: dg.h.apply(t.s.apply(x)), lambda x: b.s.apply(dg.h_B.apply(x))),
    ):
        bad = next((k for k in src.basis if lhs(src.basis_element(k)) != rhs(src.basis_element(k))), None)
        v.add(label, bad is None, None if bad is None else src.format_index(bad))
    return v


SSFL = "SSFL"
SURJECTIVITY = "SurjectivityLemma"


def check_split_diagram(dg: SplitSESMorphismDiagram, mode: str = SSFL) -> Verdict:
    """Check the split short five lemma or the surjectivity lemma on ``dg``.

    Commutativity of the squares is verified first; if it fails the
    returned verdict reports that failure and the lemma is not evaluated.
    """
    if mode not in (SSFL, SURJECTIVITY):
        raise ValueError(f"unknown mode {mode}")
    v = diagram_commutes(dg)
    v.subject = f"{dg.name or 'diagram'} [{mode}]"
    if not v.passed:
        v.info["lemma"] = "not evaluated: diagram does not commute"
        return v
    aA, a, aB = dg.h_A.analyze(), dg.h.analyze(), dg.h_B.analyze()
    v.info = {
        "h_A": aA.to_dict(), "h": a.to_dict(), "h_B": aB.to_dict(),
    }
    if mode == SSFL:
        premise = aA.bijective and aB.bijective
        ok = (not premise) or a.bijective
        witness = None
        if not ok:
            deficit = [t - r for t, r in zip(a.target_dims, a.image_dims)]
            witness = f"rank deficits of h per degree: {deficit}"
        v.info["premise"] = premise
        v.add("h_A, h_B bijective ⇒ h bijective", ok, witness)
    else:
        lhs = a.surjective
        rhs = aA.surjective and aB.surjective
        v.add("h surjective ⇔ h_A and h_B surjective", lhs == rhs,
              None if lhs == rhs else f"h: {lhs}, h_A: {aA.surjective}, h_B: {aB.surjective}")
    return v


# -- torsion theory ---------------------------------------------------------

def _generating_set(G: FiniteGroup) -> List[int]:
    gens: List[int] = []
    reached = {G.identity}
    for g in range(G.order):
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        reached = set(reached)
        while frontier:
            nxt = []
            for h in frontier:
                for k in gens:
                    x = G.mul(k, h)
                    if x not in reached:
                        reached.add(x)
                        nxt.append(x)
            frontier = nxt
    return gens


def enumerate_morphisms(src: StructuralPresentation, dst: HopfPresentation) -> Tuple[List[HopfMorphism], Dict]:
    """Every Hopf morphism ``src → dst`` on F_d, when the search is finite.

    Lie generators must land in ``P(dst)`` and group generators in
    ``𝒢(dst)``; the search is finite exactly when ``P(dst) = 0`` or ``src``
    has no Lie generators.
    """
    cert: Dict = {}
    lie_dim = src.lie.dim
    if lie_dim:
        P = primitives(dst)
        cert["target_primitive_dim"] = P.lie.dim
        if P.lie.dim:
            raise UnsupportedKind(f"{dst.name} has non-zero primitives; the morphism search is infinite")
    gens = _generating_set(src.group)
    if gens:
        Gd = grouplikes(dst)
        cert["target_grouplike_order"] = Gd.group.order
        choices = Gd.elements
    else:
        choices = []
    found = []
    for combo in itertools.product(choices, repeat=len(gens)):
        images = {lab: dst.zero() for lab in src.lie.labels}
        images.update({src.group.labels[g]: x for g, x in zip(gens, combo)})
        try:
            found.append(make_morphism(src, dst, images))
        except ValidationError:
            continue
    cert["candidates"] = len(choices) ** len(gens)
    return found, cert


def zero_morphism_search(T: StructuralPresentation, F: StructuralPresentation,
                         reverse: bool = False) -> Verdict:
    """Certify that the zero morphism is the only Hopf morphism ``T → F``.

    With ``reverse`` the search ``F → T`` is also run and recorded under
    ``info["reverse"]``; it does not affect the verdict.
    """
    v = Verdict(subject=f"Hom({T.name}, {F.name})", degree=T.degree)
    try:
        found, cert = enumerate_morphisms(T, F)
    except UnsupportedKind as exc:
        v.add("search is finite", False, F.name, str(exc))
        return v
    zero = zero_morphism(T, F)
    nonzero = [f for f in found if f.equals_on_basis(zero) is not None]
    v.add("zero morphism found", len(found) - len(nonzero) == 1, None if found else "none found")
    v.add("no non-zero morphism", not nonzero, nonzero[0].name if nonzero else None)
    cert["morphisms_found"] = len(found)
    if reverse:
        back = zero_morphism_search(F, T)
        cert["reverse"] = {"passed": back.passed, **back.info}
    v.info = cert
    return v


def hereditary_check(f: HopfMorphism) -> Verdict:
    """The Hopf kernel of a morphism out of U(L) has only the trivial grouplike."""
    K = hkernel(f)
    G = grouplikes(K.sub)
    v = Verdict(subject=f"hereditary({f.name})", degree=f.source.degree)
    v.add("HKer has trivial grouplikes", G.group.order == 1,
          None if G.group.order == 1 else str(K.sub.element(G.elements[1].terms)))
    v.info = {"hker_dims": K.dims, "grouplike_order": G.group.order}
    return v

"""Hopf algebra morphisms defined by generator images."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .constructors import StructuralPresentation
from .core import (
    BasisIndex,
    Element,
    HopfPresentation,
    OwnershipError,
    TensorElement,
    ValidationError,
    _add_into,
    _pairs_within,
    tensor,
)
from .exactlin import SparseMatrix, Subspace


@dataclass
class MorphismAnalysis:
    injective: bool
    surjective: bool
    image_dims: List[int]
    source_dims: List[int]
    target_dims: List[int]
    degree: int

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def to_dict(self):
        return {
            "degree": self.degree,
            "injective_at_d": self.injective,
            "surjective_at_d": self.surjective,
            "image_dims": self.image_dims,
            "source_dims": self.source_dims,
            "target_dims": self.target_dims,
        }


class HopfMorphism:
    """Validated morphism ``source -> target`` stored as images of the F_d basis.

    Instances are only produced by :func:`make_morphism`,
    :meth:`from_basis_images` and the helpers below, all of which validate.
    """

    def __init__(self, source: HopfPresentation, target: HopfPresentation,
                 images: Dict[BasisIndex, Element], name: str = "",
                 generator_images: Optional[Dict[str, Element]] = None):
        self.source = source
        self.target = target
        self.images = images
        self.name = name or f"{source.name}→{target.name}"
        self.generator_images = generator_images or {}
        self._analysis: Optional[MorphismAnalysis] = None

    # -- construction -------------------------------------------------------
    @classmethod
    def from_basis_images(cls, source: HopfPresentation, target: HopfPresentation,
                          images: Mapping[BasisIndex, Element], name: str = "") -> "HopfMorphism":
        full = {}
        for b in source.basis:
            img = images.get(b)
            if img is None:
                img = target.zero()
            if img.owner is not target:
                raise OwnershipError(f"image of {source.format_index(b)} is not an element of {target.name}")
            full[b] = img
        f = cls(source, target, full, name)
        failure = f._failure()
        if failure:
            raise ValidationError(f"{f.name}: {failure[0]} fails at {failure[1]}", failure[1])
        return f

    def _failure(self) -> Optional[Tuple[str, str]]:
        """First violated morphism law on F_d, as ``(law, witness)``."""
        S, T = self.source, self.target
        if self.apply(S.one()) != T.one():
            return ("unit", "1")
        for b in S.basis:
            x = S.basis_element(b)
            fx = self.images[b]
            if T.counit(fx) != S.counit(x):
                return ("counit", S.format_index(b))
            if T.comultiply(fx) != self.apply_tensor(S.comultiply(x)):
                return ("comultiplication", S.format_index(b))
            if T.antipode(fx) != self.apply(S.antipode(x)):
                return ("antipode", S.format_index(b))
        for a, b in _pairs_within(S, 2):
            lhs = self.apply(S.multiply(S.basis_element(a), S.basis_element(b)))
            rhs = T.multiply(self.images[a], self.images[b])
            if lhs != rhs:
                return ("multiplicativity", f"{S.format_index(a)}, {S.format_index(b)}")
        return None

    # -- application --------------------------------------------------------
    def apply(self, a: Element) -> Element:
        if a.owner is not self.source:
            raise OwnershipError(f"{self.name} applied to an element of {a.owner.name}")
        acc: Dict = {}
        for b, c in a.terms.items():
            _add_into(acc, self.images[b].terms, c)
        return Element(self.target, acc)

    def __call__(self, a: Element) -> Element:
        return self.apply(a)

    def apply_tensor(self, t: TensorElement) -> TensorElement:
        acc: Dict = {}
        for key, c in t.terms.items():
            part = tensor(*(self.images[k] for k in key))
            _add_into(acc, part.terms, c)
        return TensorElement(tuple(self.target for _ in t.owners), acc)

    def compose_after(self, other: "HopfMorphism", name: str = "") -> "HopfMorphism":
        """``self ∘ other``."""
        if other.target is not self.source:
            raise OwnershipError(f"cannot compose {self.name} after {other.name}")
        images = {b: self.apply(img) for b, img in other.images.items()}
        return HopfMorphism.from_basis_images(other.source, self.target, images, name or f"{self.name}∘{other.name}")

    def equals_on_basis(self, other: "HopfMorphism") -> Optional[BasisIndex]:
        """None when both agree on F_d, else the first differing basis index."""
        if other.source is not self.source or other.target is not self.target:
            raise OwnershipError("morphisms with different source/target")
        for b in self.source.basis:
            if self.images[b] != other.images[b]:
                return b
        return None

    # -- linear algebra -----------------------------------------------------
    def matrix(self, k: Optional[int] = None) -> SparseMatrix:
        """Matrix of the restriction F_k(source) → F_k(target)."""
        k = self.source.degree if k is None else k
        cols = self.source.basis_of_degree_at_most(k)
        rows = {b: i for i, b in enumerate(self.target.basis_of_degree_at_most(k))}
        entries = []
        for j, b in enumerate(cols):
            for t, v in self.images[b].terms.items():
                if t not in rows:
                    raise ValidationError(f"{self.name} does not preserve the filtration at {b}")
                entries.append((rows[t], j, v))
        return SparseMatrix(len(rows), len(cols), tuple(entries))

    def analyze(self) -> MorphismAnalysis:
        if self._analysis is None:
            S, T = self.source, self.target
            d = S.degree
            span = Subspace(T.basis)
            image_dims = []
            by_deg = sorted(S.basis, key=S.index_degree)
            it = iter(by_deg)
            pending = next(it, None)
            for k in range(d + 1):
                while pending is not None and S.index_degree(pending) <= k:
                    span.add(self.images[pending].terms)
                    pending = next(it, None)
                image_dims.append(span.dim)
            src_dims = S.dims_by_degree()
            tgt_dims = T.dims_by_degree() + [T.dimension] * max(0, d - T.degree)
            tgt_dims = tgt_dims[: d + 1]
            self._analysis = MorphismAnalysis(
                injective=image_dims[-1] == src_dims[-1],
                surjective=image_dims[-1] == tgt_dims[-1],
                image_dims=image_dims,
                source_dims=src_dims,
                target_dims=tgt_dims,
                degree=d,
            )
        return self._analysis

    def __repr__(self):
        return f"<HopfMorphism {self.name}: {self.source.name} → {self.target.name}>"


def _commutator(T: HopfPresentation, a: Element, b: Element) -> Element:
    return T.multiply(a, b) - T.multiply(b, a)


def _generator_failure(src: StructuralPresentation, dst: HopfPresentation,
                       images: Mapping[str, Element]) -> Optional[Tuple[str, str]]:
    """First violated generator-level requirement, as ``(law, witness)``."""
    G, L = src.group, src.lie
    unknown = sorted(set(images) - set(G.labels) - set(L.labels))
    if unknown:
        return (f"{unknown[0]} is not a generator of {src.name}", unknown[0])
    for lab in L.labels:
        if lab not in images:
            return (f"no image given for generator {lab}", lab)
        if not dst.is_primitive(images[lab]):
            return (f"image of {lab} is not primitive", lab)
    for lab in G.labels:
        if lab in images and not dst.is_grouplike(images[lab]):
            return (f"image of {lab} is not grouplike", lab)
    group_imgs = _group_images(src, dst, images)
    missing = [G.labels[g] for g in range(G.order) if g not in group_imgs]
    if missing:
        return (f"group images do not determine {missing[0]}", missing[0])
    for lab in G.labels:
        if lab in images and images[lab] != group_imgs[G.index(lab)]:
            return (f"image of {lab} contradicts the other generator images", lab)
    for g, h in itertools.product(range(G.order), repeat=2):
        if dst.multiply(group_imgs[g], group_imgs[h]) != group_imgs[G.mul(g, h)]:
            rel = f"{G.labels[g]}*{G.labels[h]} = {G.labels[G.mul(g, h)]}"
            return (f"relation {rel} violated by the images", rel)
    lie_imgs = [images[lab] for lab in L.labels]
    for i, j in itertools.combinations(range(L.dim), 2):
        lhs = _commutator(dst, lie_imgs[i], lie_imgs[j])
        rhs = dst.zero()
        for k, c in L.bracket_basis(i, j).items():
            rhs = rhs + c * lie_imgs[k]
        if lhs != rhs:
            rel = f"[{L.labels[i]}, {L.labels[j]}] = {L.format_vector(L.bracket_basis(i, j))}"
            return (f"relation {rel} violated by the images", rel)
    for g in range(G.order):
        mat = src.action.matrix(g)
        ginv = group_imgs[G.inv(g)]
        for i in range(L.dim):
            lhs = dst.multiply(dst.multiply(group_imgs[g], lie_imgs[i]), ginv)
            rhs = dst.zero()
            for k, c in mat[i].items():
                rhs = rhs + c * lie_imgs[k]
            if lhs != rhs:
                rel = f"{G.labels[g]}·{L.labels[i]}"
                return (f"action relation {rel} violated by the images", rel)
    return None


def _group_images(src: StructuralPresentation, dst: HopfPresentation,
                  images: Mapping[str, Element]) -> Dict[int, Element]:
    """Images of every group element reachable from the given generators."""
    G = src.group
    gens = {G.index(lab): img for lab, img in images.items() if lab in G.labels}
    group_imgs: Dict[int, Element] = {G.identity: gens.get(G.identity, dst.one())}
    for g, img in gens.items():
        group_imgs.setdefault(g, img)
    frontier = list(group_imgs)
    while frontier:
        nxt = []
        for h in frontier:
            for g, img in gens.items():
                gh = G.mul(g, h)
                if gh not in group_imgs:
                    group_imgs[gh] = dst.multiply(img, group_imgs[h])
                    nxt.append(gh)
        frontier = nxt
    return group_imgs


def unchecked_morphism(src: StructuralPresentation, dst: HopfPresentation,
                       images: Mapping[str, Element], name: str = "") -> HopfMorphism:
    """Extend generator images multiplicatively without validating anything.

    Only meant for building deliberately broken arrows (negative controls);
    :func:`morphism_failure` diagnoses them.
    """
    for lab, img in images.items():
        if not isinstance(img, Element) or img.owner is not dst:
            raise OwnershipError(f"image of {lab} is not an element of {dst.name}")
    G, L = src.group, src.lie
    group_imgs = _group_images(src, dst, images)
    lie_imgs = [images.get(lab, dst.zero()) for lab in L.labels]
    full: Dict[BasisIndex, Element] = {}
    for b in src.basis:
        m, g = b
        img = dst.one()
        for i, a in enumerate(m):
            for _ in range(a):
                img = dst.multiply(img, lie_imgs[i])
        full[b] = dst.multiply(img, group_imgs.get(g, dst.zero()))
    keep = [lab for lab in list(L.labels) + list(G.labels) if lab in images]
    return HopfMorphism(src, dst, full, name or f"{src.name}→{dst.name}",
                        generator_images={lab: images[lab] for lab in keep})


def morphism_failure(f: HopfMorphism) -> Optional[Tuple[str, str]]:
    """None for a genuine Hopf morphism on F_d, else ``(law, witness)``."""
    if f.generator_images and isinstance(f.source, StructuralPresentation):
        bad = _generator_failure(f.source, f.target, f.generator_images)
        if bad:
            return bad
    return f._failure()


def make_morphism(src: HopfPresentation, dst: HopfPresentation, images: Mapping[str, Element],
                  name: str = "") -> HopfMorphism:
    """Morphism from a structural presentation given by generator images.

    ``images`` maps every Lie basis label and a generating set of group
    labels of ``src`` to elements of ``dst``. Images of group generators must
    be grouplike and images of Lie generators primitive; group-table, bracket
    and action relations are then checked before the map is extended to all
    of F_d and verified there.
    """
    if not isinstance(src, StructuralPresentation):
        raise ValidationError(f"{src.name} has no generators; use HopfMorphism.from_basis_images")
    name = name or f"{src.name}→{dst.name}"
    for lab, img in images.items():
        if not isinstance(img, Element) or img.owner is not dst:
            raise OwnershipError(f"{name}: image of {lab} is not an element of {dst.name}")
    bad = _generator_failure(src, dst, images)
    if bad:
        raise ValidationError(f"{name}: {bad[0]}", bad[1])
    f = unchecked_morphism(src, dst, images, name)
    bad = f._failure()
    if bad:
        raise ValidationError(f"{name}: {bad[0]} fails at {bad[1]}", bad[1])
    return f


def apply(f: HopfMorphism, a: Element) -> Element:
    return f.apply(a)


def analyze(f: HopfMorphism) -> MorphismAnalysis:
    return f.analyze()


def identity_morphism(H: HopfPresentation, name: str = "") -> HopfMorphism:
    return HopfMorphism(H, H, {b: H.basis_element(b) for b in H.basis}, name or f"id_{H.name}")


def zero_morphism(src: HopfPresentation, dst: HopfPresentation, name: str = "") -> HopfMorphism:
    """``u ∘ ε``: the zero morphism of the pointed category."""
    one = dst.one()
    return HopfMorphism(src, dst, {b: one * src._eps_basis(b) for b in src.basis}, name or f"0:{src.name}→{dst.name}")


def compose(g: HopfMorphism, f: HopfMorphism, name: str = "") -> HopfMorphism:
    """``g ∘ f``."""
    return g.compose_after(f, name)

"""Line-oriented model files.

A model file is a sequence of ``[kind name]`` sections holding ``key = value``
entries; ``#`` starts a comment. Section kinds:

``[group G]``
    ``elements = e g`` followed by one table row per line (``e g``), or
    ``cyclic = n``.
``[lie L]``
    ``basis = x y`` and ``bracket x y = expr`` lines (missing brackets are 0).
``[action A]``
    ``group = G``, ``lie = L`` and ``act g x = expr``; unlisted pairs act as
    the identity. Actions are closed under the group, so generators suffice.
``[hopf H]``
    one of ``group = G``, ``enveloping = L``, ``smash = A`` or
    ``structure = constants``; optional ``degree = n``. Structure constants
    use ``basis``, ``degrees``, ``unit``, ``mul a b = expr``,
    ``coproduct a = expr`` (tensor legs joined by ``@``), ``counit a = c``,
    ``antipode a = expr`` and optional ``grouplikes = a b``.
``[morphism f]``
    ``source``, ``target`` and one ``label = expr`` per generator (structural
    source) or basis label (structure-constant source); ``unchecked = yes``
    skips validation. Derived arrows: ``decompose = H`` with
    ``map = i|p|s|h``, ``induced = f`` with ``map = f1|f2``, ``compose = g f``,
    ``identity = H``, ``zero = S T``.
``[diagram D]``
    ``kind = ses`` with ``decompose = H`` or ``i``/``p``/``s``; or
    ``kind = morphism`` with ``top``, ``bottom``, ``hA``, ``h``, ``hB`` and
    ``mode = SSFL|SurjectivityLemma|both``.

A top-level ``degree = n`` sets the default truncation degree. Every split
sequence ``D`` also exposes ``D.A``, ``D.H``, ``D.B`` (objects) and ``D.i``,
``D.p``, ``D.s`` (arrows) to later sections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .catalog import cyclic
from .constructors import (
    DEFAULT_DEGREE,
    FiniteGroup,
    HopfAction,
    LieAlgebra,
    StructuralPresentation,
    enveloping,
    group_algebra,
    smash,
)
from .core import DegreeOverflow, Element, HopfError, HopfPresentation, TablePresentation, TruncationError
from .exactness import SSFL, SURJECTIVITY, SplitSESMorphismDiagram
from .functors import SplitSES, decompose, induced_pair
from .morphisms import (
    HopfMorphism,
    compose,
    identity_morphism,
    make_morphism,
    unchecked_morphism,
    zero_morphism,
)

KINDS = ("group", "lie", "action", "hopf", "morphism", "diagram")
MODES = (SSFL, SURJECTIVITY)


class ModelError(HopfError):
    """Input error with a source position."""

    def __init__(self, message: str, line: int = 0, col: int = 0, path: str = ""):
        self.message, self.line, self.col, self.path = message, line, col, path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{col}: {message}" if line else f"{where}{message}")


@dataclass
class Entry:
    key: str
    value: Optional[str]  # None for bare lines (group table rows)
    line: int
    col: int
    value_col: int = 0


@dataclass
class Section:
    kind: str
    name: str
    line: int
    entries: List[Entry] = field(default_factory=list)

    def get(self, key: str) -> Optional[Entry]:
        for e in self.entries:
            if e.key == key:
                return e
        return None


@dataclass
class DiagramSpec:
    diagram: SplitSESMorphismDiagram
    modes: Tuple[str, ...]


@dataclass
class ModelFile:
    path: str
    degree: int
    sections: List[Section]
    groups: Dict[str, FiniteGroup] = field(default_factory=dict)
    lies: Dict[str, LieAlgebra] = field(default_factory=dict)
    actions: Dict[str, HopfAction] = field(default_factory=dict)
    hopfs: Dict[str, HopfPresentation] = field(default_factory=dict)
    morphisms: Dict[str, HopfMorphism] = field(default_factory=dict)
    sequences: Dict[str, SplitSES] = field(default_factory=dict)
    diagrams: Dict[str, DiagramSpec] = field(default_factory=dict)
    # ``D.A``, ``D.H``, ``D.B``, ``D.i``, ``D.p``, ``D.s`` for each sequence D
    aliases: Dict[str, object] = field(default_factory=dict)

    def kind_of(self, name: str) -> Optional[str]:
        for s in self.sections:
            if s.name == name:
                return s.kind
        return None


# -- lexical layer ---------------------------------------------------------

_HEADER = re.compile(r"^\[\s*([A-Za-z]+)\s+([^\]\s]+)\s*\]\s*$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


def _strip_comment(text: str) -> str:
    pos = text.find("#")
    return text if pos < 0 else text[:pos]


def read_sections(text: str, path: str = "") -> Tuple[List[Entry], List[Section]]:
    """Split text into global entries and sections, keeping positions."""
    glob: List[Entry] = []
    sections: List[Section] = []
    names = set()
    for n, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if body.startswith("["):
            m = _HEADER.match(body)
            if not m:
                raise ModelError("malformed section header", n, col, path)
            kind, name = m.group(1), m.group(2)
            if kind not in KINDS:
                raise ModelError(f"unknown section kind {kind}", n, col + 1, path)
            if not _NAME.match(name):
                raise ModelError(f"invalid name {name}", n, col, path)
            if name in names:
                raise ModelError(f"duplicate name {name}", n, col, path)
            names.add(name)
            sections.append(Section(kind, name, n))
            continue
        if "=" in body:
            key, _, value = body.partition("=")
            vcol = col + len(key) + 1 + (len(value) - len(value.lstrip()))
            entry = Entry(" ".join(key.split()), value.strip(), n, col, vcol)
        else:
            entry = Entry(body, None, n, col, col)
        if sections:
            sections[-1].entries.append(entry)
        else:
            glob.append(entry)
    return glob, sections


# -- expressions ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|(\^)|([-+*@()]))")


def _tokens(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {text[pos:].strip()[:1]!r}", pos)
        for kind, val in zip(("num", "name", "op", "op"), m.groups()):
            if val is not None:
                out.append((kind, val, m.start(m.lastindex)))
        pos = m.end()
    return out


Term = Tuple[Fraction, List[List[Tuple[str, int, int]]]]


def parse_linear(text: str) -> List[Term]:
    """``expr := ['-'] term (('+'|'-') term)*``; ``term := [coef '*'] legs``.

    Legs are separated by ``@`` and each is a ``*``-product of
    ``label['^'n]`` factors. Returns ``(coefficient, legs)`` with factors as
    ``(label, exponent, column)``; the bare literal ``0`` is the empty sum.
    """
    toks = _tokens(text)
    if [t[1] for t in toks] == ["0"]:
        return []
    terms: List[Term] = []
    i = 0

    def peek(k=0):
        return toks[i + k] if i + k < len(toks) else ("end", "", len(text))

    def expect_factor():
        nonlocal i
        kind, val, col = peek()
        if kind == "num" and val == "1":
            i += 1
            return ("1", 1, col)
        if kind != "name":
            raise ValueError(f"expected a label, got {val or 'end of line'}", col)
        i += 1
        exp = 1
        if peek()[1] == "^":
            i += 1
            k2, v2, c2 = peek()
            if k2 != "num" or "/" in v2:
                raise ValueError("exponent must be a non-negative integer", c2)
            exp = int(v2)
            i += 1
        return (val, exp, col)

    sign = Fraction(1)
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = Fraction(-1 if peek()[1] == "-" else 1)
        i += 1
    while True:
        coef = sign
        legs: List[List[Tuple[str, int, int]]] = [[]]
        kind, val, col = peek()
        if kind == "num":
            coef *= Fraction(val)
            i += 1
            if peek()[1] == "*":
                i += 1
                legs[-1].append(expect_factor())
        else:
            legs[-1].append(expect_factor())
        while peek()[1] in ("*", "@") and peek()[0] == "op":
            op = peek()[1]
            i += 1
            if op == "@":
                legs.append([])
            legs[-1].append(expect_factor())
        terms.append((coef, legs))
        kind, val, col = peek()
        if kind == "end":
            return terms
        if val not in "+-" or kind != "op":
            raise ValueError(f"unexpected {val}", col)
        sign = Fraction(-1 if val == "-" else 1)
        i += 1


# -- the parser proper ---------------------------------------------------------

def _unit_leg(leg, labels):
    # a bare number stands for that multiple of a basis vector labelled 1
    return [("1", 1, 0)] if not leg and "1" in labels else leg


_RESERVED_MORPHISM = {"source", "target", "unchecked", "decompose", "map", "induced", "compose", "identity", "zero"}


class _Builder:
    def __init__(self, path: str, degree_override: Optional[int]):
        self.path = path
        self.override = degree_override
        self.model: Optional[ModelFile] = None

    def err(self, msg: str, entry: Optional[Entry] = None, line: int = 0, offset: int = 0) -> ModelError:
        if entry is not None:
            return ModelError(msg, entry.line, entry.value_col + offset, self.path)
        return ModelError(msg, line, 1, self.path)

    def require(self, sec: Section, key: str) -> Entry:
        e = sec.get(key)
        if e is None or e.value is None:
            raise ModelError(f"[{sec.kind} {sec.name}] needs '{key} ='", sec.line, 1, self.path)
        return e

    def ref(self, table: Dict, entry: Entry, what: str):
        name = entry.value
        if name in table:
            return table[name]
        hit = self.model.aliases.get(name)
        if hit is not None and (
            (table is self.model.hopfs and isinstance(hit, HopfPresentation))
            or (table is self.model.morphisms and isinstance(hit, HopfMorphism))
        ):
            return hit
        raise self.err(f"unknown {what} {name}", entry)

    def linear(self, entry: Entry, text: Optional[str] = None) -> List[Term]:
        try:
            return parse_linear(entry.value if text is None else text)
        except ValueError as exc:
            msg, col = exc.args
            raise self.err(str(msg), entry, offset=col) from None

    def vector(self, entry: Entry, labels, what: str = "basis label") -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for coef, legs in self.linear(entry):
            legs = [_unit_leg(leg, labels) for leg in legs]
            if len(legs) != 1 or len(legs[0]) != 1 or legs[0][0][1] != 1:
                raise self.err("expected a linear combination of labels", entry)
            lab, _, col = legs[0][0]
            if lab not in labels:
                raise self.err(f"unknown {what} {lab}", entry, offset=col)
            k = labels.index(lab)
            out[k] = out.get(k, 0) + coef
        return {k: v for k, v in out.items() if v}

    def element(self, H: HopfPresentation, entry: Entry, text: Optional[str] = None) -> Element:
        acc = H.zero()
        for coef, legs in self.linear(entry, text):
            if len(legs) != 1:
                raise self.err("tensor legs are not allowed here", entry)
            acc = acc + coef * self._product(H, legs[0], entry)
        return acc

    def _product(self, H: HopfPresentation, factors, entry: Entry) -> Element:
        x = H.one()
        for lab, exp, col in factors:
            g = self._generator(H, lab, entry, col)
            for _ in range(exp):
                x = H.multiply(x, g)
        return x

    def _generator(self, H: HopfPresentation, lab: str, entry: Entry, col: int) -> Element:
        if isinstance(H, TablePresentation):
            if lab in H.labels:
                return H.basis_element(H.labels.index(lab))
        elif isinstance(H, StructuralPresentation):
            if lab in H.lie.labels or lab in H.group.labels:
                return H.generator(lab)
        if lab == "1":
            return H.one()
        raise self.err(f"unknown basis label {lab}", entry, offset=col)

    def tensor_terms(self, H: TablePresentation, entry: Entry) -> Dict[Tuple[int, int], Fraction]:
        out: Dict[Tuple[int, int], Fraction] = {}
        for coef, legs in self.linear(entry):
            legs = [_unit_leg(leg, H.labels) for leg in legs]
            if len(legs) != 2 or any(len(leg) != 1 or leg[0][1] != 1 for leg in legs):
                raise self.err("expected a combination of a@b terms", entry)
            idx = []
            for leg in legs:
                lab, _, col = leg[0]
                if lab not in H.labels:
                    raise self.err(f"unknown basis label {lab}", entry, offset=col)
                idx.append(H.labels.index(lab))
            key = (idx[0], idx[1])
            out[key] = out.get(key, 0) + coef
        return out

    def integer(self, entry: Entry) -> int:
        try:
            return int(entry.value)
        except (TypeError, ValueError):
            raise self.err(f"expected an integer, got {entry.value}", entry) from None

    def degree_for(self, sec: Section) -> int:
        if self.override is not None:
            return self.override
        e = sec.get("degree")
        return self.integer(e) if e is not None else self.model.degree

    # -- sections ---------------------------------------------------------
    def group(self, sec: Section) -> FiniteGroup:
        e = sec.get("cyclic")
        if e is not None:
            n = self.integer(e)
            if n < 1:
                raise self.err("cyclic order must be positive", e)
            g = cyclic(n)
            return FiniteGroup(g.labels, g.table, sec.name)
        labels = self.require(sec, "elements").value.split()
        rows = [e for e in sec.entries if e.value is None]
        if len(rows) != len(labels):
            raise ModelError(f"group {sec.name}: expected {len(labels)} table rows, got {len(rows)}",
                             sec.line, 1, self.path)
        table = []
        for r in rows:
            cells = r.key.split()
            if len(cells) != len(labels):
                raise self.err(f"row has {len(cells)} entries, expected {len(labels)}", r)
            for c in cells:
                if c not in labels:
                    raise self.err(f"unknown element {c}", r)
            table.append(cells)
        return FiniteGroup.from_rows(labels, table, sec.name)

    def lie(self, sec: Section) -> LieAlgebra:
        labels = tuple(self.require(sec, "basis").value.split())
        brackets = {}
        for e in sec.entries:
            if e.key.startswith("bracket"):
                parts = e.key.split()
                if len(parts) != 3:
                    raise self.err("expected 'bracket a b = expr'", e)
                for p in parts[1:]:
                    if p not in labels:
                        raise ModelError(f"unknown basis label {p}", e.line, e.col, self.path)
                i, j = labels.index(parts[1]), labels.index(parts[2])
                brackets[(i, j)] = self.vector(e, list(labels))
        return LieAlgebra(labels, brackets, sec.name)

    def action(self, sec: Section) -> HopfAction:
        G = self.ref(self.model.groups, self.require(sec, "group"), "group")
        L = self.ref(self.model.lies, self.require(sec, "lie"), "Lie algebra")
        mats: Dict[str, List[Dict[int, Fraction]]] = {}
        for e in sec.entries:
            if not e.key.startswith("act"):
                continue
            parts = e.key.split()
            if len(parts) != 3:
                raise self.err("expected 'act g x = expr'", e)
            g, x = parts[1], parts[2]
            if g not in G.labels:
                raise ModelError(f"unknown group element {g}", e.line, e.col, self.path)
            if x not in L.labels:
                raise ModelError(f"unknown basis label {x}", e.line, e.col, self.path)
            mat = mats.setdefault(g, [{i: Fraction(1)} for i in range(L.dim)])
            mat[L.labels.index(x)] = self.vector(e, list(L.labels))
        if not mats:
            return HopfAction.trivial(G, L)
        return HopfAction.from_generators(G, L, mats)

    def hopf(self, sec: Section) -> HopfPresentation:
        d = self.degree_for(sec)
        if d < 2:
            raise ModelError(f"truncation degree must be at least 2, got {d}", sec.line, 1, self.path)
        for key, build in (
            ("group", lambda e: group_algebra(self.ref(self.model.groups, e, "group"), d, sec.name)),
            ("enveloping", lambda e: enveloping(self.ref(self.model.lies, e, "Lie algebra"), d, sec.name)),
            ("smash", lambda e: smash(self.ref(self.model.actions, e, "action"), d, sec.name)),
        ):
            e = sec.get(key)
            if e is not None:
                return build(e)
        e = sec.get("structure")
        if e is None:
            raise ModelError(f"[hopf {sec.name}] needs one of group/enveloping/smash/structure",
                             sec.line, 1, self.path)
        if e.value != "constants":
            raise self.err("only 'structure = constants' is supported", e)
        return self.table(sec, d)

    def table(self, sec: Section, d: int) -> TablePresentation:
        labels = self.require(sec, "basis").value.split()
        n = len(labels)
        deg_e = sec.get("degrees")
        degrees = [int(x) for x in deg_e.value.split()] if deg_e else [0] * n
        if len(degrees) != n:
            raise self.err("degrees must list one value per basis label", deg_e)
        # a provisional shell lets entries be parsed against the labels
        shell = TablePresentation(sec.name, labels, degrees, {}, {}, {}, [0] * n, {}, d)
        unit_e = self.require(sec, "unit")
        unit = self.vector(unit_e, labels)
        mul, delta, anti = {}, {}, {}
        counit = [Fraction(0)] * n
        grouplikes = None
        for e in sec.entries:
            parts = e.key.split()
            head = parts[0]
            if head in ("mul", "coproduct", "counit", "antipode"):
                want = 3 if head == "mul" else 2
                if len(parts) != want:
                    raise self.err(f"expected '{head} {'a b' if want == 3 else 'a'} = ...'", e)
                for p in parts[1:]:
                    if p not in labels:
                        raise ModelError(f"unknown basis label {p}", e.line, e.col, self.path)
                idx = [labels.index(p) for p in parts[1:]]
                if head == "mul":
                    mul[tuple(idx)] = self.vector(e, labels)
                elif head == "coproduct":
                    delta[idx[0]] = self.tensor_terms(shell, e)
                elif head == "antipode":
                    anti[idx[0]] = self.vector(e, labels)
                else:
                    try:
                        counit[idx[0]] = Fraction(e.value)
                    except (ValueError, ZeroDivisionError):
                        raise self.err(f"expected a rational number, got {e.value}", e) from None
            elif head == "grouplikes":
                grouplikes = []
                for lab in e.value.split():
                    if lab not in labels:
                        raise self.err(f"unknown basis label {lab}", e)
                    grouplikes.append({labels.index(lab): Fraction(1)})
        return TablePresentation(sec.name, labels, degrees, unit, mul, delta, counit, anti, d,
                                 grouplikes=grouplikes)

    def morphism(self, sec: Section) -> HopfMorphism:
        m = self.model
        e = sec.get("decompose")
        if e is not None:
            D = decompose(self.ref(m.hopfs, e, "hopf algebra"))
            which = self.require(sec, "map")
            arrows = {"i": D.ses.i, "p": D.ses.p, "s": D.ses.s, "h": D.comparison}
            return self.ref(arrows, which, "decomposition map")
        e = sec.get("induced")
        if e is not None:
            pair = induced_pair(self.ref(m.morphisms, e, "morphism"))
            return self.ref({"f1": pair.f1, "f2": pair.f2}, self.require(sec, "map"), "induced map")
        e = sec.get("compose")
        if e is not None:
            names = e.value.split()
            if len(names) != 2:
                raise self.err("expected 'compose = g f' (g after f)", e)
            g, f = (self.ref(m.morphisms, Entry(e.key, n, e.line, e.col, e.value_col), "morphism") for n in names)
            if g.source is not f.target:
                raise self.err(f"cannot compose: {f.name} lands in {f.target.name}, {g.name} starts at {g.source.name}", e)
            return compose(g, f, sec.name)
        e = sec.get("identity")
        if e is not None:
            return identity_morphism(self.ref(m.hopfs, e, "hopf algebra"), sec.name)
        e = sec.get("zero")
        if e is not None:
            names = e.value.split()
            if len(names) != 2:
                raise self.err("expected 'zero = S T'", e)
            S, T = (self.ref(m.hopfs, Entry(e.key, n, e.line, e.col, e.value_col), "hopf algebra") for n in names)
            return zero_morphism(S, T, sec.name)
        src = self.ref(m.hopfs, self.require(sec, "source"), "hopf algebra")
        dst = self.ref(m.hopfs, self.require(sec, "target"), "hopf algebra")
        unchecked = (sec.get("unchecked") or Entry("", "no", 0, 0)).value in ("yes", "true")
        images: Dict[str, Element] = {}
        for e in sec.entries:
            if e.value is None or e.key in _RESERVED_MORPHISM:
                continue
            images[e.key] = self.element(dst, e)
        if isinstance(src, StructuralPresentation):
            known = set(src.generator_labels())
            for e in sec.entries:
                if e.value is not None and e.key not in _RESERVED_MORPHISM and e.key not in known:
                    raise ModelError(f"unknown generator {e.key} of {src.name}", e.line, e.col, self.path)
            if unchecked:
                return unchecked_morphism(src, dst, images, sec.name)
            return make_morphism(src, dst, images, sec.name)
        lookup = {lab: k for k, lab in enumerate(src.labels)}
        for lab in images:
            if lab not in lookup:
                raise ModelError(f"unknown basis label {lab} of {src.name}", sec.line, 1, self.path)
        full = {k: images.get(lab, dst.zero()) for lab, k in lookup.items()}
        if unchecked:
            return HopfMorphism(src, dst, full, sec.name)
        return HopfMorphism.from_basis_images(src, dst, full, name=sec.name)

    def diagram(self, sec: Section):
        m = self.model
        kind = self.require(sec, "kind")
        if kind.value == "ses":
            e = sec.get("decompose")
            if e is not None:
                s = decompose(self.ref(m.hopfs, e, "hopf algebra")).ses
                return SplitSES(s.A, s.H, s.B, s.i, s.p, s.s, sec.name)
            i = self.ref(m.morphisms, self.require(sec, "i"), "morphism")
            p = self.ref(m.morphisms, self.require(sec, "p"), "morphism")
            s = self.ref(m.morphisms, self.require(sec, "s"), "morphism")
            if i.target is not p.source or s.source is not p.target or s.target is not p.source:
                raise ModelError(f"diagram {sec.name}: arrows do not form A → H ⇄ B", sec.line, 1, self.path)
            return SplitSES(i.source, p.source, p.target, i, p, s, sec.name)
        if kind.value == "morphism":
            top = self.ref(m.sequences, self.require(sec, "top"), "split sequence")
            bottom = self.ref(m.sequences, self.require(sec, "bottom"), "split sequence")
            arrows = [self.ref(m.morphisms, self.require(sec, k), "morphism") for k in ("hA", "h", "hB")]
            for f, (a, b), key in zip(arrows, ((top.A, bottom.A), (top.H, bottom.H), (top.B, bottom.B)),
                                      ("hA", "h", "hB")):
                if f.source is not a or f.target is not b:
                    raise self.err(f"{key} must map {a.name} → {b.name}", sec.get(key))
            mode_e = sec.get("mode")
            mode = mode_e.value if mode_e else "both"
            modes = MODES if mode == "both" else (mode,)
            if any(x not in MODES for x in modes):
                raise self.err(f"unknown mode {mode}", mode_e)
            return DiagramSpec(SplitSESMorphismDiagram(top, bottom, *arrows, name=sec.name), modes)
        raise self.err(f"unknown diagram kind {kind.value}", kind)


def parse_text(text: str, path: str = "", degree: Optional[int] = None) -> ModelFile:
    """Parse and build every object; constructor failures carry the section."""
    b = _Builder(path, degree)
    glob, sections = read_sections(text, path)
    d = DEFAULT_DEGREE
    for e in glob:
        if e.key != "degree" or e.value is None:
            raise ModelError(f"unexpected top-level entry {e.key}", e.line, e.col, path)
        d = b.integer(e)
    if degree is not None:
        d = degree
    model = ModelFile(path, d, sections)
    b.model = model
    steps: Dict[str, Tuple[Callable, Dict]] = {
        "group": (b.group, model.groups),
        "lie": (b.lie, model.lies),
        "action": (b.action, model.actions),
        "hopf": (b.hopf, model.hopfs),
        "morphism": (b.morphism, model.morphisms),
    }
    for sec in sections:
        try:
            if sec.kind == "diagram":
                obj = b.diagram(sec)
                if isinstance(obj, SplitSES):
                    model.sequences[sec.name] = obj
                    for part in ("A", "H", "B", "i", "p", "s"):
                        model.aliases[f"{sec.name}.{part}"] = getattr(obj, part)
                else:
                    model.diagrams[sec.name] = obj
            else:
                build, table = steps[sec.kind]
                table[sec.name] = build(sec)
        except ModelError:
            raise
        except (DegreeOverflow, TruncationError) as exc:
            raise ModelError(f"[{sec.kind} {sec.name}]: {exc}; raise the truncation degree",
                             sec.line, 1, path) from exc
        except HopfError as exc:
            raise ModelError(f"[{sec.kind} {sec.name}]: {exc}", sec.line, 1, path) from exc
    return model


def parse_model(path, degree: Optional[int] = None) -> ModelFile:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read(), str(path), degree)


# -- pretty printer ---------------------------------------------------------

def format_model(model: ModelFile) -> str:
    """Normalized text for ``model``; parsing it rebuilds the same objects."""
    out = [f"degree = {model.degree}"]
    for sec in model.sections:
        out.append("")
        out.append(f"[{sec.kind} {sec.name}]")
        for e in sec.entries:
            if e.value is None:
                out.append(" ".join(e.key.split()))
            else:
                value = " ".join(e.value.split())
                out.append(f"{e.key} = {value}")
    return "\n".join(out) + "\n"


def signature(model: ModelFile) -> Dict[str, object]:
    """Comparable description of the built object graph."""
    sig: Dict[str, object] = {"degree": model.degree}
    for name, G in model.groups.items():
        sig[f"group {name}"] = (G.labels, G.table)
    for name, L in model.lies.items():
        sig[f"lie {name}"] = (L.labels, sorted((k, sorted(v.items())) for k, v in L.structure_constants().items()))
    for name, A in model.actions.items():
        sig[f"action {name}"] = (A.group.name, A.lie.name, [[sorted(c.items()) for c in A.matrix(g)]
                                                          for g in range(A.group.order)])
    for name, H in model.hopfs.items():
        sig[f"hopf {name}"] = (getattr(H, "kind", ""), H.degree, H.dims_by_degree(),
                               [H.format_index(b) for b in H.basis])
    for name, f in model.morphisms.items():
        sig[f"morphism {name}"] = (f.source.name, f.target.name,
                                   [str(f.images[b]) for b in f.source.basis])
    for name, s in model.sequences.items():
        sig[f"ses {name}"] = (s.i.name, s.p.name, s.s.name)
    for name, dg in model.diagrams.items():
        D = dg.diagram
        sig[f"diagram {name}"] = (D.top.name, D.bottom.name, D.h_A.name, D.h.name, D.h_B.name, dg.modes)
    return sig

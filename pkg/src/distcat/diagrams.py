"""Commuting diagrams of the verified constructions as dot digraphs.

Five diagrams are exposed, numbered as the CLI presents them:

1. the forward distributivity arrow, a copairing into a×(b+c);
2. the partial-application transpose out of a^(b×c) × c;
3. the uncurrying transpose out of (a^b)^c;
4. the currying transpose triangle;
5. the untranspose composite through 1×a and the flipped exponent.

Nodes are real objects of the chosen instance (merged when the instance
identifies them, as a Heyting algebra does); edge labels are the names
the construction traces use. Output is plain structural dot with no
layout hints, deterministic for fixed inputs, so renders can be golden
tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import BicartesianClosedCategory

DIAGRAM_IDS = (1, 2, 3, 4, 5)

DIAGRAM_TITLES = {
    1: "distributivity forward copairing",
    2: "partial-application transpose",
    3: "uncurrying transpose",
    4: "currying transpose triangle",
    5: "untranspose composite",
}


@dataclass
class Diagram:
    name: str
    nodes: list[tuple[str, str]] = field(default_factory=list)
    edges: list[tuple[str, str, str]] = field(default_factory=list)


class _Builder:
    def __init__(self, name: str, cat: BicartesianClosedCategory, sized: bool):
        self.diagram = Diagram(name)
        self.cat = cat
        self.sized = sized
        self._ids: dict = {}

    def node(self, obj) -> str:
        if obj in self._ids:
            return self._ids[obj]
        node_id = f"n{len(self._ids)}"
        label = self.cat.object_label(obj)
        if self.sized:
            label = f"{label} [{obj.size}]"
        self._ids[obj] = node_id
        self.diagram.nodes.append((node_id, label))
        return node_id

    def edge(self, src, dst, label: str) -> None:
        self.diagram.edges.append((self.node(src), self.node(dst), label))


def build_diagram(
    diagram_id: int,
    cat: BicartesianClosedCategory,
    a,
    b,
    c,
    sized: bool = False,
) -> Diagram:
    if diagram_id not in DIAGRAM_IDS:
        raise ValueError(f"unknown diagram id {diagram_id}")
    bld = _Builder(f"diagram{diagram_id}", cat, sized)
    if diagram_id == 1:
        ab, ac = cat.product(a, b), cat.product(a, c)
        total = cat.coproduct(ab, ac)
        target = cat.product(a, cat.coproduct(b, c))
        bld.edge(ab, total, "inj₁")
        bld.edge(ac, total, "inj₂")
        bld.edge(ab, target, "id×inj₁")
        bld.edge(ac, target, "id×inj₂")
        bld.edge(total, target, "[id×inj₁, id×inj₂]")
        bld.edge(target, a, "π₁")
        bld.edge(target, cat.coproduct(b, c), "π₂")
    elif diagram_id == 2:
        e = cat.exponential(cat.product(b, c), a)
        start = cat.product(cat.product(e, b), c)
        reordered = cat.product(cat.product(e, c), b)
        stage = cat.product(cat.exponential(b, a), b)
        flat = cat.product(e, cat.product(b, c))
        bld.edge(start, flat, "assoc")
        bld.edge(flat, a, "eval")
        bld.edge(start, reordered, "reorder")
        bld.edge(reordered, stage, "partial-apply×id")
        bld.edge(stage, a, "eval")
    elif diagram_id == 3:
        ab = cat.exponential(b, a)
        h = cat.exponential(c, ab)
        e = cat.exponential(cat.product(b, c), a)
        start = cat.product(h, cat.product(b, c))
        lifted = cat.product(e, cat.product(b, c))
        reordered = cat.product(cat.product(h, c), b)
        stage = cat.product(ab, b)
        bld.edge(start, lifted, "uncurry×id")
        bld.edge(lifted, a, "eval")
        bld.edge(start, reordered, "reorder")
        bld.edge(reordered, stage, "eval×id")
        bld.edge(stage, a, "eval")
    elif diagram_id == 4:
        e = cat.exponential(cat.product(b, c), a)
        ab = cat.exponential(b, a)
        start = cat.product(e, c)
        stage = cat.product(cat.exponential(c, ab), c)
        bld.edge(start, stage, "curry×id")
        bld.edge(stage, ab, "eval")
        bld.edge(start, ab, "partial-apply")
    else:
        one = cat.terminal()
        ab = cat.product(a, b)
        widened = cat.product(cat.product(one, a), b)
        flat = cat.product(one, ab)
        applied = cat.product(cat.exponential(ab, c), ab)
        bld.edge(ab, widened, "⟨!,id⟩×id")
        bld.edge(widened, flat, "assoc")
        bld.edge(flat, applied, "(flip∘uncurry∘Λ(f∘π₂))×id")
        bld.edge(applied, c, "eval")
        bld.edge(ab, c, "untranspose(f)")
    return bld.diagram


def to_dot(diagram: Diagram) -> str:
    lines = [f"digraph {diagram.name} {{"]
    for node_id, label in diagram.nodes:
        lines.append(f'  "{node_id}" [label="{label}"];')
    for src, dst, label in diagram.edges:
        lines.append(f'  "{src}" -> "{dst}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""The reduced Young poset of a word: a layered DAG of partitions.

Layer t holds the partitions reachable from the empty partition by adding
the vertical strips prescribed by the first t letters.  With a target
attached, every node carries bottom/top path counts, unreachable nodes are
pruned, and each edge is labelled with its intersection form and the
number of bottom-to-top paths through it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .kappa import KappaValue, kappa_strip_form
from .weights import (Partition, Word, add_strip, format_partition, omega)


@dataclass(frozen=True)
class PosetNode:
    partition: Partition
    layer: int
    paths_from_bottom: int
    paths_to_top: int | None


@dataclass(frozen=True)
class PosetEdge:
    src: Partition
    dst: Partition
    kappa: KappaValue | None
    multiplicity: int | None


class ReducedYoungPoset:
    """Layered DAG of partitions for a word, optionally pruned to a target.

    Node order everywhere is (layer, lexicographic partition); partitions
    determine their layer uniquely since letters are positive.
    """

    def __init__(self, word: Word, target: Partition | None = None):
        self.word = word
        self.target = target
        if target is not None and sum(target) != sum(word.letters):
            raise ValueError(
                f"target {format_partition(target)} has size {sum(target)}, "
                f"word {word} has size {sum(word.letters)}")

        layers, children = _build_layers(word)
        bottom = _bottom_counts(layers, children)

        if target is None:
            top: dict[Partition, int] | None = None
        else:
            top = _top_counts(layers, children, target)

        self.layers: list[list[Partition]] = []
        self.nodes: dict[Partition, PosetNode] = {}
        self.edges: list[PosetEdge] = []
        for t, layer in enumerate(layers):
            kept = sorted(p for p in layer
                          if top is None or top.get(p, 0) > 0)
            self.layers.append(kept)
            for p in kept:
                self.nodes[p] = PosetNode(
                    p, t, bottom[p], None if top is None else top[p])
        for t, layer in enumerate(self.layers[:-1]):
            for p in layer:
                for c in sorted(children[p]):
                    if c not in self.nodes:
                        continue
                    if top is None:
                        self.edges.append(PosetEdge(p, c, None, None))
                    else:
                        self.edges.append(PosetEdge(
                            p, c, kappa_strip_form(p, c),
                            bottom[p] * top[c]))

    def bottom_count(self, p: Partition) -> int:
        return self.nodes[p].paths_from_bottom if p in self.nodes else 0

    def top_count(self, p: Partition) -> int | None:
        return self.nodes[p].paths_to_top if p in self.nodes else 0

    def __len__(self) -> int:
        return len(self.nodes)


def _build_layers(word: Word):
    """Full (unpruned) layers plus the child map."""
    layers: list[set[Partition]] = [{()}]
    children: dict[Partition, list[Partition]] = {}
    for a in word.letters:
        nxt: set[Partition] = set()
        moves = omega(a, word.n)
        for p in layers[-1]:
            kids = []
            for mu in moves:
                c = add_strip(p, mu)
                if c is not None:
                    kids.append(c)
                    nxt.add(c)
            children[p] = kids
        layers.append(nxt)
    for p in layers[-1]:
        children[p] = []
    return [sorted(layer) for layer in layers], children


def _bottom_counts(layers, children) -> dict[Partition, int]:
    bottom = {(): 1}
    for layer in layers[:-1]:
        for p in layer:
            b = bottom[p]
            for c in children[p]:
                bottom[c] = bottom.get(c, 0) + b
    return bottom


def _top_counts(layers, children, target: Partition) -> dict[Partition, int]:
    # layer sizes strictly increase, so the target can only sit on top
    top = {p: 0 for layer in layers for p in layer}
    if target not in top:
        return top
    top[target] = 1
    for layer in reversed(layers[:-1]):
        for p in layer:
            top[p] = sum(top[c] for c in children[p])
    return top


def build_poset(word: Word, target: Partition | None = None) -> ReducedYoungPoset:
    """Build the reduced Young poset of `word`; with a target, prune to the
    nodes that can reach it and label edges with kappa and multiplicity."""
    return ReducedYoungPoset(word, target)


def path_counts(poset: ReducedYoungPoset, target: Partition
                ) -> dict[Partition, tuple[int, int]]:
    """Bottom and top path counts of every node relative to `target`.

    The target must be present in the top layer.
    """
    if not poset.layers or target not in poset.layers[-1]:
        raise ValueError(f"target {format_partition(target)} absent from top layer")
    layers, children = _build_layers(poset.word)
    bottom = _bottom_counts(layers, children)
    top = _top_counts(layers, children, target)
    return {p: (bottom[p], top[p])
            for layer in layers for p in layer if top[p] > 0}


def export_dot(poset: ReducedYoungPoset) -> str:
    """Deterministic Graphviz rendering; node label "partition\\nb=..,t=..",
    edge label = factored kappa."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    for layer in poset.layers:
        for p in layer:
            node = poset.nodes[p]
            name = format_partition(p)
            label = f"{name}\\nb={node.paths_from_bottom}"
            if node.paths_to_top is not None:
                label += f",t={node.paths_to_top}"
            lines.append(f'  "{name}" [label="{label}"];')
    for e in poset.edges:
        attr = "" if e.kappa is None else f' [label="{e.kappa}"]'
        lines.append(f'  "{format_partition(e.src)}" -> '
                     f'"{format_partition(e.dst)}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(poset: ReducedYoungPoset) -> str:
    """Deterministic JSON with the node and edge schema used by the CLI."""
    doc = {
        "word": str(poset.word),
        "n": poset.word.n,
        "target": None if poset.target is None else format_partition(poset.target),
        "nodes": [
            {
                "layer": poset.nodes[p].layer,
                "partition": format_partition(p),
                "paths_from_bottom": poset.nodes[p].paths_from_bottom,
                "paths_to_top": poset.nodes[p].paths_to_top,
            }
            for layer in poset.layers for p in layer
        ],
        "edges": [
            {
                "from": format_partition(e.src),
                "to": format_partition(e.dst),
                "kappa": None if e.kappa is None else str(e.kappa),
                "multiplicity": e.multiplicity,
            }
            for e in poset.edges
        ],
    }
    return json.dumps(doc, indent=2) + "\n"

"""Graphviz text for the specialization order of a finite space."""
from __future__ import annotations

from fintop.core.space import FinSpace, bits
from fintop.prime import accumulation_points


def to_dot(X: FinSpace, name: str = "X") -> str:
    """Hasse diagram of the specialization order, smaller points at the bottom.

    Points with equal closures share one node.  Nodes holding a non-isolated
    point are drawn as double circles.
    """
    order = X.preorder
    acc = accumulation_points(X)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(X.n):
        cls = order.up[x] & order.down[x]
        if cls & ((1 << x) - 1):
            continue
        label = ",".join(map(str, bits(cls)))
        shape = ' shape=doublecircle' if cls & acc else ""
        lines.append(f'  p{x} [label="{label}"{shape}];')
    for x, y in order.hasse():
        lines.append(f"  p{x} -> p{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"

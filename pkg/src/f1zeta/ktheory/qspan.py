"""Spans ``X <<- S >-> Y`` and their composition by fiber product.

A span from ``X`` to ``Y`` has a surjective cokernel leg ``S ->> X`` and an
injective kernel leg ``S >-> Y``, both split.  Because the kernel leg is
injective, an isomorphism of spans is forced to be the map matching the two
images in ``Y``; relabelling ``S`` in the order of its image gives a
canonical representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotComposable
from .modules import (
    ModuleMap,
    PointedModule,
    compose,
    identity_map,
    is_split_cokernel,
    is_split_kernel,
    pullback,
)


@dataclass(frozen=True)
class QSpan:
    cokernel_leg: ModuleMap  # S ->> X
    kernel_leg: ModuleMap  # S >-> Y

    def __post_init__(self):
        if self.cokernel_leg.source != self.kernel_leg.source:
            raise ValueError("legs must share their middle object")
        if not is_split_kernel(self.kernel_leg):
            raise ValueError("kernel leg is not a split injection")
        if not is_split_cokernel(self.cokernel_leg):
            raise ValueError("cokernel leg is not a split surjection")

    @property
    def middle(self) -> PointedModule:
        return self.kernel_leg.source

    @property
    def source(self) -> PointedModule:
        return self.cokernel_leg.target

    @property
    def target(self) -> PointedModule:
        return self.kernel_leg.target


def identity_span(Y: PointedModule) -> QSpan:
    return QSpan(identity_map(Y), identity_map(Y))


def canonical(s: QSpan) -> QSpan:
    """Relabel the middle object by the order of its image in the target."""
    order = sorted(range(s.middle.size), key=lambda x: s.kernel_leg.table[x])
    new = {x: k for k, x in enumerate(order)}
    S = s.middle
    action = tuple(tuple(new[row[x]] for x in order) for row in S.action)
    T = PointedModule(S.monoid, S.size, action, tuple(S.labels[x] for x in order))
    return QSpan(
        ModuleMap(T, s.source, tuple(s.cokernel_leg.table[x] for x in order)),
        ModuleMap(T, s.target, tuple(s.kernel_leg.table[x] for x in order)),
    )


def span_key(s: QSpan) -> tuple:
    c = canonical(s)
    return (c.source, c.target, c.middle.action, c.cokernel_leg.table, c.kernel_leg.table)


def spans_equal(s1: QSpan, s2: QSpan) -> bool:
    """Equality of isomorphism classes over the same end objects."""
    return span_key(s1) == span_key(s2)


def compose_with_base_change(s1: QSpan, s2: QSpan) -> tuple[QSpan, ModuleMap]:
    """``s2 . s1`` plus the base-changed cokernel leg ``S x_Y T ->> S``."""
    if s1.target != s2.source:
        raise NotComposable("kernel leg of the first span does not land in the source of the second")
    P, to_s, to_t = pullback(s1.kernel_leg, s2.cokernel_leg)
    span = QSpan(compose(s1.cokernel_leg, to_s), compose(s2.kernel_leg, to_t))
    return canonical(span), to_s


def q_compose(s1: QSpan, s2: QSpan) -> QSpan:
    """Compose ``X <<- S >-> Y`` with ``Y <<- T >-> Z`` through ``S x_Y T``."""
    return compose_with_base_change(s1, s2)[0]

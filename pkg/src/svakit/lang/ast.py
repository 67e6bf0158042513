"""Tree representation of a parsed assertion unit.

Nodes live in one of three syntactic layers, ordered BOOL < SEQ < PROP:
boolean expressions can be used wherever a sequence is expected, and
sequences wherever a property is expected, but not the other way around.
Parentheses are never represented; grouping is implied by the tree shape.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator


class Kind(enum.Enum):
    """Node kinds, one per construct of the accepted grammar."""

    ATOM = "Atom"
    NOT = "Not"
    AND = "And"
    OR = "Or"
    REL_OP = "RelOp"
    SYS_FUNC = "SysFunc"
    DELAY = "Delay"
    DELAY_RANGE = "DelayRange"
    REPEAT_CONSEC = "RepeatConsec"
    REPEAT_RANGE = "RepeatRange"
    REPEAT_GOTO = "RepeatGoto"
    REPEAT_NONCONSEC = "RepeatNonConsec"
    SEQ_CONCAT = "SeqConcat"
    IMPL_OVERLAP = "ImplOverlap"
    IMPL_NONOVERLAP = "ImplNonOverlap"
    PROP_NOT = "PropNot"
    PROP_AND = "PropAnd"
    PROP_OR = "PropOr"
    UNTIL = "Until"
    WITHIN = "Within"
    LOCAL_VAR_DECL = "LocalVarDecl"
    LOCAL_VAR_ASSIGN = "LocalVarAssign"


class Layer(enum.IntEnum):
    BOOL = 0
    SEQ = 1
    PROP = 2


_BOOL_KINDS = frozenset(
    {Kind.ATOM, Kind.NOT, Kind.AND, Kind.OR, Kind.REL_OP, Kind.SYS_FUNC}
)
_PROP_KINDS = frozenset(
    {
        Kind.IMPL_OVERLAP,
        Kind.IMPL_NONOVERLAP,
        Kind.PROP_NOT,
        Kind.PROP_AND,
        Kind.PROP_OR,
        Kind.UNTIL,
    }
)

#: System functions accepted by the grammar. All take one signal argument;
#: $past also takes an optional cycle count >= 1.
SYS_FUNCS = ("$rose", "$fell", "$stable", "$past")


@dataclass(frozen=True)
class AstNode:
    """One node of the assertion tree.

    Payload fields are populated per kind:

    * ``name``   -- ATOM signal, SYS_FUNC argument, local-variable name
    * ``func``   -- SYS_FUNC function name (one of :data:`SYS_FUNCS`)
    * ``op``     -- REL_OP operator, ``==`` or ``!=``
    * ``bounds`` -- (lo, hi) cycle bounds for delays and repetitions, and
      (n, n) for ``$past(x, n)``; ``hi=None`` is the unbounded marker ``$``

    DELAY / DELAY_RANGE carry two children in the binary form
    ``lhs ##n rhs`` and one child in the prefix form ``##n rhs``.
    """

    kind: Kind
    children: tuple["AstNode", ...] = ()
    name: str | None = None
    func: str | None = None
    op: str | None = None
    bounds: tuple[int, int | None] | None = None

    def __post_init__(self) -> None:
        if self.kind in (Kind.ATOM, Kind.SYS_FUNC) and self.children:
            raise ValueError(f"{self.kind.value} nodes are leaves")
        if self.bounds is not None:
            lo, hi = self.bounds
            if lo < 0 or (hi is not None and hi < lo):
                raise ValueError(f"malformed bounds {self.bounds}")

    @property
    def layer(self) -> Layer:
        if self.kind in _BOOL_KINDS:
            return Layer.BOOL
        if self.kind in _PROP_KINDS:
            return Layer.PROP
        return Layer.SEQ

    def walk(self) -> Iterator["AstNode"]:
        """Pre-order traversal of this subtree."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def depth(self) -> int:
        """Longest root-to-leaf path, counted in nodes (leaf = 1)."""
        if not self.children:
            return 1
        return 1 + max(c.depth() for c in self.children)


@dataclass(frozen=True)
class AssertionUnit:
    """A full assertion: mandatory clocking, optional disable, and a body.

    ``source`` is the original text and is excluded from equality so that
    trees can be compared node-for-node across reprints.
    """

    edge: str  # "posedge" | "negedge"
    clock: str
    body: AstNode
    disable: AstNode | None = None
    source: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.edge not in ("posedge", "negedge"):
            raise ValueError(f"bad clock edge {self.edge!r}")
        if self.disable is not None and not _is_boolean_tree(self.disable):
            raise ValueError("disable expression must be purely boolean")


def _is_boolean_tree(node: AstNode) -> bool:
    return all(n.kind in _BOOL_KINDS for n in node.walk())


def atom(name: str) -> AstNode:
    return AstNode(Kind.ATOM, name=name)


def sys_func(func: str, arg: str, depth: int | None = None) -> AstNode:
    bounds = (depth, depth) if depth is not None else None
    return AstNode(Kind.SYS_FUNC, name=arg, func=func, bounds=bounds)

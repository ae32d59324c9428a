"""Text formats for leaf sets and set families, and the JSON report writer.

Leaf set file::

    # comment
    2 3
    000
    010

Family file::

    universe 3 x y z
    000
    110

Each member line is a k-bit string; character ``i`` says whether the
``i``-th universe element belongs to the member.
"""
from __future__ import annotations

import hashlib
import json
from typing import Iterable, Sequence

from .learning import Labeling, SetFamily
from .tree_core import LeafSet, node_str, parse_node


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_leafset(text: str) -> LeafSet:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing header line 'm n'") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"header must be 'm n', got {header!r}", lineno)
    m, n = int(parts[0]), int(parts[1])
    if m < 2:
        raise FormatError("arity must be at least 2", lineno)
    if m > 10:
        raise FormatError("digit strings only support arity up to 10", lineno)
    leaves = set()
    for lineno, line in lines:
        if n == 0 and line in ("ε", "e", "-"):
            leaf = ()
        else:
            if len(line) != n or not line.isdigit() or any(int(c) >= m for c in line):
                raise FormatError(f"{line!r} is not a length-{n} string over 0..{m - 1}", lineno)
            leaf = parse_node(line)
        if leaf in leaves:
            raise FormatError(f"duplicate leaf {line!r}", lineno)
        leaves.add(leaf)
    return LeafSet(m, n, frozenset(leaves))


def render_leafset(B: LeafSet) -> str:
    lines = [f"{B.m} {B.n}"]
    lines += [node_str(b) if b else "ε" for b in B.sorted()]
    return "\n".join(lines) + "\n"


def read_leafset(path: str) -> LeafSet:
    with open(path, encoding="utf-8") as fh:
        return parse_leafset(fh.read())


def parse_family(text: str) -> SetFamily:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing header line 'universe k ...'") from None
    parts = header.split()
    if len(parts) < 2 or parts[0] != "universe" or not parts[1].isdigit():
        raise FormatError(f"header must be 'universe k x1 ... xk', got {header!r}", lineno)
    k = int(parts[1])
    names = parts[2:]
    if not names:
        names = [f"x{i}" for i in range(k)]
    if len(names) != k:
        raise FormatError(f"header names {len(names)} elements but declares {k}", lineno)
    if len(set(names)) != k:
        raise FormatError("universe element names must be distinct", lineno)
    members = set()
    for lineno, line in lines:
        if k == 0 and line in ("ε", "e", "-"):
            line = ""
        if len(line) != k or any(c not in "01" for c in line):
            raise FormatError(f"{line!r} is not a {k}-bit string", lineno)
        mask = sum(1 << i for i, c in enumerate(line) if c == "1")
        if mask in members:
            raise FormatError(f"duplicate member {line!r}", lineno)
        members.add(mask)
    return SetFamily(tuple(names), frozenset(members))


def member_str(F: SetFamily, mask: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(len(F.universe))) or "-"


def render_family(F: SetFamily) -> str:
    header = " ".join(["universe", str(len(F.universe)), *map(str, F.universe)])
    # members sorted by their bit strings for a stable rendering
    lines = [header] + sorted(member_str(F, G) for G in F.members)
    return "\n".join(lines) + "\n"


def read_family(path: str) -> SetFamily:
    with open(path, encoding="utf-8") as fh:
        return parse_family(fh.read())


def parse_labeling(text: str, F: SetFamily) -> Labeling:
    """One ``node label`` pair per line; ``ε`` names the root.  The height is inferred."""
    labels = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'node element', got {line!r}", lineno)
        node_text, elem = parts
        try:
            node = parse_node(node_text)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if any(x > 1 for x in node):
            raise FormatError(f"{node_text!r} is not a binary node", lineno)
        if elem not in F.universe:
            raise FormatError(f"unknown universe element {elem!r}", lineno)
        if node in labels:
            raise FormatError(f"node {node_text!r} labeled twice", lineno)
        labels[node] = elem
    n = 1 + max((len(a) for a in labels), default=-1)
    try:
        return Labeling.from_dict(n, labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_labeling(path: str, F: SetFamily) -> Labeling:
    with open(path, encoding="utf-8") as fh:
        return parse_labeling(fh.read(), F)


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def dump_report(fields: dict) -> str:
    """JSON text with insertion-ordered keys and a trailing newline."""
    return json.dumps(fields, indent=2, ensure_ascii=False) + "\n"


def leaf_strings(B: LeafSet) -> list[str]:
    return [node_str(b) for b in B.sorted()]


def tuple_from_names(F: SetFamily, names: Sequence[str]) -> list[str]:
    for x in names:
        F.position(x)
    return list(names)

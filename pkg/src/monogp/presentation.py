"""Reading and writing presentation files.

One directive per line, ``#`` starts a comment::

    vertices: 1 2
    arrow a: 1 -> 2
    arrow b: 2 -> 1
    relation: a b a b        # walk a, then b, then a, then b

Relations list arrow names in the order they are walked.
"""

from __future__ import annotations

import re

from .algebra import MonomialPresentation
from .errors import MonomialError
from .quiver import Path, Quiver

_TOKEN = re.compile(r"[^\s:#]+")
_ARROW = re.compile(r"^(\s*)arrow(\s+)([^\s:#]+)(\s*):(\s*)([^\s:#]+)(\s*)->(\s*)([^\s:#]+)\s*$")


class ParseError(MonomialError, ValueError):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__("line %d, column %d: %s" % (line, column, message))


class PresentationSyntaxError(ParseError):
    pass


class DuplicateIdentifier(ParseError):
    pass


class UnknownVertex(ParseError):
    pass


class UnknownArrow(ParseError):
    pass


class NotComposable(ParseError):
    pass


class RelationTooShort(ParseError):
    pass


def _tokens(text, offset):
    return [(m.group(0), offset + m.start() + 1) for m in _TOKEN.finditer(text)]


def parse(text: str) -> MonomialPresentation:
    vertices, arrows, relations = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        head = stripped.split(":", 1)[0].strip()
        if head == "vertices" and ":" in stripped:
            rest_at = line.index(":") + 1
            for tok, col in _tokens(line[rest_at:], rest_at):
                if tok == "->":
                    raise PresentationSyntaxError(lineno, col, "unexpected '->'")
                vertices.append((tok, lineno, col))
        elif head == "relation" and ":" in stripped:
            rest_at = line.index(":") + 1
            relations.append((_tokens(line[rest_at:], rest_at), lineno, rest_at + 1))
        elif stripped.startswith("arrow") and (len(stripped) == 5 or stripped[5].isspace()):
            m = _ARROW.match(line)
            if not m:
                raise PresentationSyntaxError(
                    lineno, indent + 1, "expected 'arrow NAME: SOURCE -> TARGET'"
                )
            name, src, tgt = m.group(3), m.group(6), m.group(9)
            if "->" in (name, src, tgt):
                raise PresentationSyntaxError(lineno, indent + 1, "misplaced '->'")
            arrows.append((name, src, tgt, lineno, m.start(3) + 1, m.start(6) + 1, m.start(9) + 1))
        else:
            raise PresentationSyntaxError(lineno, indent + 1, "unknown directive %r" % (head,))

    seen_v = set()
    for tok, ln, col in vertices:
        if tok in seen_v:
            raise DuplicateIdentifier(ln, col, "vertex %r declared twice" % (tok,))
        seen_v.add(tok)
    seen_a = {}
    for name, src, tgt, ln, cn, cs, ct in arrows:
        if name in seen_a:
            raise DuplicateIdentifier(ln, cn, "arrow %r declared twice" % (name,))
        if src not in seen_v:
            raise UnknownVertex(ln, cs, "unknown vertex %r" % (src,))
        if tgt not in seen_v:
            raise UnknownVertex(ln, ct, "unknown vertex %r" % (tgt,))
        seen_a[name] = (src, tgt)
    Q = Quiver([v for v, _, _ in vertices], [(n, s, t) for n, s, t, *_ in arrows])

    gens = []
    for toks, ln, col in relations:
        if not toks:
            raise RelationTooShort(ln, col, "empty relation")
        for tok, c in toks:
            if tok not in seen_a:
                raise UnknownArrow(ln, c, "unknown arrow %r" % (tok,))
        for (a, _), (b, cb) in zip(toks, toks[1:]):
            if seen_a[a][1] != seen_a[b][0]:
                raise NotComposable(
                    ln, cb, "arrow %r does not start where %r ends" % (b, a)
                )
        if len(toks) < 2:
            raise RelationTooShort(ln, toks[0][1], "relations need at least two arrows")
        gens.append(Q.path([t for t, _ in toks]))
    return MonomialPresentation(Q, tuple(gens))


def parse_file(path) -> MonomialPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def format_presentation(pres: MonomialPresentation) -> str:
    Q = pres.quiver
    lines = ["vertices: " + " ".join(str(v) for v in Q.vertices)]
    for a, s, t in Q.arrows:
        lines.append("arrow %s: %s -> %s" % (a, s, t))
    for g in pres.generators:
        lines.append("relation: " + " ".join(str(a) for a in g.arrows))
    return "\n".join(lines) + "\n"


def normalized(pres: MonomialPresentation):
    """Semantic content with identifiers as strings, for round-trip comparison."""
    Q = pres.quiver
    return (
        tuple(str(v) for v in Q.vertices),
        tuple((str(a), str(s), str(t)) for a, s, t in Q.arrows),
        tuple(tuple(str(a) for a in g.arrows) for g in pres.generators),
    )


def path_label(p: Path, compact: bool = False) -> str:
    if compact and p.arrows:
        return "".join(str(a) for a in p.arrows)
    return p.label()

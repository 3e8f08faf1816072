"""String forms of words and presentations.

Words are written ``a^2*b^-3*f1``: ``*`` joins factors, ``^`` takes an
integer power, ``1`` is the identity and parentheses group a subword.
Whitespace is ignored everywhere.

Presentations have two textual forms that both parse back:

* text:    ``< a, b | a^2*b^-3 >``
* algebra: a computer-algebra style script::

      F := FreeGroup("a", "b");
      a := F.1; b := F.2;
      G := F / [ a^2*b^-3 ];
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import ParseError, UnknownGenerator
from .words import Letters, invert_letters, reduce_letters

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[+-]?\d+")


def format_letters(letters: Sequence[int], labels: Sequence[str]) -> str:
    if not letters:
        return "1"
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        name = labels[abs(letters[i]) - 1]
        exp = (j - i) * (1 if letters[i] > 0 else -1)
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts)


class _WordParser:
    def __init__(self, text: str, index: dict[str, int]):
        # positions refer to the whitespace-stripped text
        self.s = re.sub(r"\s+", "", text)
        self.pos = 0
        self.index = index

    def parse(self) -> Letters:
        if not self.s:
            raise ParseError("empty word", 0)
        out = self._product()
        if self.pos != len(self.s):
            raise ParseError(f"unexpected {self.s[self.pos]!r}", self.pos)
        return out

    def _product(self) -> Letters:
        out = list(self._factor())
        while self.pos < len(self.s) and self.s[self.pos] == "*":
            self.pos += 1
            out.extend(self._factor())
        return reduce_letters(out)

    def _factor(self) -> Letters:
        s, start = self.s, self.pos
        if start >= len(s):
            raise ParseError("expected a generator", start)
        if s[start] == "(":
            self.pos += 1
            base = self._product()
            if self.pos >= len(s) or s[self.pos] != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
        elif s[start] == "1":
            self.pos += 1
            base = ()
        else:
            m = _NAME.match(s, start)
            if not m:
                raise ParseError("expected a generator name", start)
            name = m.group(0)
            if name not in self.index:
                raise UnknownGenerator(name)
            self.pos = m.end()
            base = (self.index[name] + 1,)
        if self.pos < len(s) and s[self.pos] == "^":
            m = _INT.match(s, self.pos + 1)
            if not m:
                raise ParseError("expected an integer exponent", self.pos + 1)
            self.pos = m.end()
            e = int(m.group(0))
            base = (base if e >= 0 else invert_letters(base)) * abs(e)
        return base


def parse_letters(text: str, labels: Sequence[str]) -> Letters:
    """Parse a word over ``labels`` into reduced signed letters."""
    index = {name: i for i, name in enumerate(labels)}
    return _WordParser(text, index).parse()


def format_presentation(generators: Sequence[str], relations: Sequence[Letters]) -> str:
    parts = [", ".join(generators), ", ".join(format_letters(r, generators) for r in relations)]
    return "< " + " | ".join(parts).strip() + " >"


def parse_presentation(text: str) -> tuple[list[str], list[Letters]]:
    """Inverse of :func:`format_presentation`."""
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise ParseError("presentation must be enclosed in < >", 0)
    body = s[1:-1]
    if "|" not in body:
        raise ParseError("missing '|' between generators and relations", 0)
    gen_part, rel_part = body.split("|", 1)
    gens = _split_names(gen_part)
    rels = [parse_letters(r, gens) for r in _split_top(rel_part)]
    return gens, rels


def format_algebra(generators: Sequence[str], relations: Sequence[Letters]) -> str:
    names = ", ".join(f'"{g}"' for g in generators)
    lines = [f"F := FreeGroup({names});"]
    if generators:
        lines.append(" ".join(f"{g} := F.{i + 1};" for i, g in enumerate(generators)))
    rels = ", ".join(format_letters(r, generators) for r in relations)
    lines.append(f"G := F / [ {rels} ];" if rels else "G := F / [ ];")
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> tuple[list[str], list[Letters]]:
    m = re.search(r"FreeGroup\(([^)]*)\)", text)
    if not m:
        raise ParseError("no FreeGroup(...) declaration", 0)
    gens = [g.strip().strip('"') for g in m.group(1).split(",") if g.strip()]
    r = re.search(r"/\s*\[(.*)\]", text, re.S)
    if not r:
        raise ParseError("no relator list", m.end())
    rels = [parse_letters(w, gens) for w in _split_top(r.group(1))]
    return gens, rels


def _split_names(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    for name in names:
        if not _NAME.fullmatch(name):
            raise ParseError(f"bad generator name {name!r}", text.find(name))
    return names


def _split_top(text: str) -> list[str]:
    """Split on commas that are not inside parentheses; drop empty pieces."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [p for p in (x.strip() for x in out) if p]

"""Command line front end.

Link specs are written innermost level first, levels separated by ``/``,
each level ``n:p,q``; ``+extA`` and ``+extB`` add the interior and
exterior unknots.  Example: ``1:2,3/2:1,1+extB``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .analysis import abelianize, fingerprint, tietze_simplify
from .errors import InvalidParams, ParseError, ToruslinkError
from .links import LinkSpec, TorusLinkParams, link_group
from .presentations import GroupPresentation
from .textio import parse_algebra, parse_presentation

_LEVEL = re.compile(r"([+-]?\d+):([+-]?\d+),([+-]?\d+)")
_FLAGS = {"+extA": "interior_unknot", "+extB": "exterior_unknot"}
DEFAULT_COMPARE_KMAX = 3


def parse_spec(text: str) -> LinkSpec:
    s = re.sub(r"\s+", "", text)
    flags = {"interior_unknot": False, "exterior_unknot": False}
    cut = s.find("+")
    body, tail = (s, "") if cut < 0 else (s[:cut], s[cut:])
    pos = cut
    for flag in re.findall(r"\+[^+]*", tail):
        if flag not in _FLAGS:
            raise ParseError(f"unknown flag {flag!r}", pos)
        flags[_FLAGS[flag]] = True
        pos += len(flag)
    levels = []
    pos = 0
    for chunk in body.split("/"):
        m = _LEVEL.fullmatch(chunk)
        if not m:
            raise ParseError(f"expected n:p,q, got {chunk!r}", pos)
        levels.append(TorusLinkParams(*(int(g) for g in m.groups())))
        pos += len(chunk) + 1
    return LinkSpec(tuple(levels), **flags)


def format_spec(spec: LinkSpec) -> str:
    s = "/".join(f"{lv.n}:{lv.p},{lv.q}" for lv in spec.levels)
    if spec.interior_unknot:
        s += "+extA"
    if spec.exterior_unknot:
        s += "+extB"
    return s


def _presentation_doc(G: GroupPresentation) -> dict:
    return {"generators": list(G.generators), "relations": G.relator_strings()}


def build_document(spec: LinkSpec, method: str, kmax: int | None, simplify: bool) -> tuple[dict, int]:
    """Compute everything the CLI prints; returns ``(document, exit_code)``."""
    primary = "engine" if method == "engine" else "closed"
    G = link_group(spec, primary)
    if simplify:
        G = tietze_simplify(G)
    ab = abelianize(G)
    doc = {
        "spec": format_spec(spec),
        "method": method,
        **_presentation_doc(G),
        "abelian": {"rank": ab.free_rank, "torsion": list(ab.torsion)},
        "fingerprint": {},
    }
    if kmax:
        doc["fingerprint"] = {str(k): c for k, c in fingerprint(G, kmax).counts.items()}
    code = 0
    if method == "both":
        E = link_group(spec, "engine")
        if simplify:
            E = tietze_simplify(E)
        kc = kmax or DEFAULT_COMPARE_KMAX
        fp_closed = fingerprint(G, kc)
        fp_engine = fingerprint(E, kc)
        ab_match = abelianize(E) == ab
        fp_match = fp_closed == fp_engine
        doc["comparison"] = {
            "match": ab_match and fp_match,
            "abelian_match": ab_match,
            "fingerprint_match": fp_match,
            "kmax": kc,
            "engine": {
                **_presentation_doc(E),
                "fingerprint": {str(k): c for k, c in fp_engine.counts.items()},
            },
        }
        if not (ab_match and fp_match):
            code = 2
    return doc, code


def render(doc: dict, fmt: str) -> str:
    G = GroupPresentation.from_strings(doc["generators"], doc["relations"])
    torsion = "".join(f" + Z_{d}" for d in doc["abelian"]["torsion"])
    abel = f"Z^{doc['abelian']['rank']}{torsion}"
    fp = " ".join(f"{k}:{v}" for k, v in doc["fingerprint"].items())
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "algebra":
        header = [f"# spec: {doc['spec']}", f"# method: {doc['method']}", f"# abelianization: {abel}"]
        if fp:
            header.append(f"# hom counts to S_k: {fp}")
        if "comparison" in doc:
            header.append(f"# engine/closed-form match: {doc['comparison']['match']}")
        return "\n".join(header) + "\n" + G.to_algebra()
    lines = [
        f"spec: {doc['spec']}",
        f"method: {doc['method']}",
        f"presentation: {G}",
        f"abelianization: {abel}",
    ]
    if fp:
        lines.append(f"fingerprint: {fp}")
    if "comparison" in doc:
        cmp = doc["comparison"]
        E = GroupPresentation.from_strings(cmp["engine"]["generators"], cmp["engine"]["relations"])
        lines.append(f"engine: {E}")
        lines.append(f"match: {cmp['match']} (k <= {cmp['kmax']})")
    return "\n".join(lines) + "\n"


def read_presentation(text: str) -> GroupPresentation:
    """Recover the presentation from ``text`` or ``algebra`` output."""
    if "FreeGroup(" in text:
        gens, rels = parse_algebra(text)
    else:
        line = next((ln for ln in text.splitlines() if ln.startswith("presentation:")), text)
        gens, rels = parse_presentation(line.split(":", 1)[1] if line.startswith("presentation:") else line)
    return GroupPresentation(tuple(gens), tuple(rels))


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toruslink", description="Knot groups of torus links via the groupoid pushout.")
    ap.add_argument("--spec", required=True, help="link spec, e.g. 1:2,3 or 1:1,6+extA+extB")
    ap.add_argument("--method", choices=("engine", "closed", "both"), default="closed")
    ap.add_argument("--fingerprint", type=int, metavar="KMAX", help="hom counts to S_1..S_KMAX")
    ap.add_argument("--simplify", action="store_true", help="Tietze-simplify before output")
    ap.add_argument("--format", choices=("text", "json", "algebra"), default="text")
    return ap


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for mismatches here
        return 0 if exc.code in (0, None) else 1
    try:
        spec = parse_spec(args.spec)
        if args.fingerprint is not None and args.fingerprint < 1:
            raise InvalidParams("--fingerprint needs a positive degree")
        doc, code = build_document(spec, args.method, args.fingerprint, args.simplify)
    except (ParseError, InvalidParams, ToruslinkError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(render(doc, args.format))
    if code == 2:
        print("error: engine and closed form disagree", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

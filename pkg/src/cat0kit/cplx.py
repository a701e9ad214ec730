"""The ``.cplx`` text format.

::

    # comment
    version 1
    declared-cat0 true
    simplex a b c d

Simplices may have up to five vertices unless ``dim-unrestricted true``
is given.  Serialization is canonical: names sorted within each simplex
and simplex lines sorted.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex, build_complex
from .curvature import certify_cat0_necessary
from .errors import (
    ComplexSyntaxError,
    DeclaredCat0Contradiction,
    TooHighDimension,
)

FORMAT_VERSION = 1
MAX_CORE_VERTICES = 5


@dataclass(frozen=True)
class ComplexDocument:
    complex: SimplicialComplex
    declared_cat0: bool = False
    dim_unrestricted: bool = False
    version: int = FORMAT_VERSION


def _boolean(value: str, line: int) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise ComplexSyntaxError(line, f"expected true or false, got {value!r}")


def parse_complex(text: str, *, check_declared: bool = True) -> ComplexDocument:
    """Parse a document; with ``check_declared`` a ``declared-cat0 true``
    header must survive the necessary-condition battery."""
    header: dict[str, tuple[str, int]] = {}
    simplices: list[tuple[list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *rest = line.split()
        if keyword == "simplex":
            if not rest:
                raise ComplexSyntaxError(lineno, "simplex needs at least one vertex")
            if len(set(rest)) != len(rest):
                raise ComplexSyntaxError(lineno, "repeated vertex in simplex")
            simplices.append((rest, lineno))
        elif keyword in ("version", "declared-cat0", "dim-unrestricted"):
            if len(rest) != 1:
                raise ComplexSyntaxError(lineno, f"{keyword} takes exactly one value")
            if keyword in header:
                raise ComplexSyntaxError(lineno, f"duplicate {keyword} line")
            header[keyword] = (rest[0], lineno)
        else:
            raise ComplexSyntaxError(lineno, f"unknown directive {keyword!r}")

    version = FORMAT_VERSION
    if "version" in header:
        value, lineno = header["version"]
        if value != str(FORMAT_VERSION):
            raise ComplexSyntaxError(lineno, f"unsupported version {value!r}")
    declared = _boolean(*header["declared-cat0"]) if "declared-cat0" in header else False
    unrestricted = _boolean(*header["dim-unrestricted"]) if "dim-unrestricted" in header else False
    if not simplices:
        raise ComplexSyntaxError(len(text.splitlines()) or 1, "no simplices")
    if not unrestricted:
        for names, lineno in simplices:
            if len(names) > MAX_CORE_VERTICES:
                raise TooHighDimension(
                    f"line {lineno}: simplex with {len(names)} vertices needs 'dim-unrestricted true'"
                )
    K = build_complex([names for names, _ in simplices])
    doc = ComplexDocument(K, declared, unrestricted, version)
    if check_declared and declared:
        report = certify_cat0_necessary(K)
        if not report.passes:
            raise DeclaredCat0Contradiction("declared-cat0 is true but the complex fails the curvature checks")
    return doc


def serialize_complex(doc: ComplexDocument | SimplicialComplex, *, declared_cat0: bool | None = None) -> str:
    if isinstance(doc, SimplicialComplex):
        doc = ComplexDocument(doc, bool(declared_cat0))
    elif declared_cat0 is not None:
        doc = ComplexDocument(doc.complex, declared_cat0, doc.dim_unrestricted, doc.version)
    K = doc.complex
    lines = [f"version {FORMAT_VERSION}", f"declared-cat0 {'true' if doc.declared_cat0 else 'false'}"]
    if doc.dim_unrestricted or K.dim + 1 > MAX_CORE_VERTICES:
        lines.append("dim-unrestricted true")
    rows = sorted(sorted(K.name(v) for v in top) for top in K.maximal)
    lines += ["simplex " + " ".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def canonical(text: str) -> str:
    return serialize_complex(parse_complex(text, check_declared=False))


def read_complex(path: str) -> ComplexDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())

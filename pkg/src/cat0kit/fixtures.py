"""Named example complexes used throughout the tests and by the CLI."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .complex import SimplicialComplex, build_complex
from .errors import BadParams


@dataclass(frozen=True)
class Fixture:
    name: str
    complex: SimplicialComplex
    declared_cat0: bool


def tetrahedron() -> SimplicialComplex:
    return build_complex([["a", "b", "c", "d"]])


def hex_disk() -> SimplicialComplex:
    """Six triangles around a centre ``o`` with rim ``v0 .. v5``."""
    return build_complex([["o", f"v{i}", f"v{(i + 1) % 6}"] for i in range(6)])


def octahedron() -> SimplicialComplex:
    axes = [("+x", "-x"), ("+y", "-y"), ("+z", "-z")]
    faces = [[x, y, z] for x in axes[0] for y in axes[1] for z in axes[2]]
    return build_complex(faces)


def stacked_tets(k: int = 3) -> SimplicialComplex:
    """``k`` tetrahedra ``{i, i+1, i+2, i+3}`` glued face to face in a row."""
    if k < 1:
        raise BadParams("stacked_tets needs k >= 1")
    return build_complex([[f"p{i + j}" for j in range(4)] for i in range(k)])


def strip(k: int = 3) -> SimplicialComplex:
    """A two-row strip of ``2k`` triangles between ``b0..bk`` and ``t0..tk``."""
    if k < 1:
        raise BadParams("strip needs k >= 1")
    faces = []
    for i in range(k):
        faces.append([f"b{i}", f"b{i + 1}", f"t{i}"])
        faces.append([f"b{i + 1}", f"t{i + 1}", f"t{i}"])
    return build_complex(faces)


def pentagon_join(n: int = 3) -> SimplicialComplex:
    """An (n-2)-simplex ``x1..x(n-1)`` joined with the 5-cycle ``v0..v4``.

    This gives five n-simplices arranged cyclically around the simplex.
    """
    if n < 3:
        raise BadParams("pentagon_join needs n >= 3")
    xs = [f"x{j}" for j in range(1, n)]
    return build_complex([xs + [f"v{i}", f"v{(i + 1) % 5}"] for i in range(5)])


def narwhal(n: int = 3) -> SimplicialComplex:
    """``pentagon_join(n)`` with a triangle ``{v2, v3, u}`` attached along ``v2 v3``."""
    if n < 3:
        raise BadParams("narwhal needs n >= 3")
    xs = [f"x{j}" for j in range(1, n)]
    faces = [xs + [f"v{i}", f"v{(i + 1) % 5}"] for i in range(5)]
    faces.append(["v2", "v3", "u"])
    return build_complex(faces)


def wheel(k: int = 6) -> SimplicialComplex:
    """The edge ``p q`` joined with a ``k``-cycle: ``k`` tetrahedra around one edge."""
    if k < 3:
        raise BadParams("wheel needs k >= 3")
    return build_complex([["p", "q", f"r{i}", f"r{(i + 1) % k}"] for i in range(k)])


_GENERATORS: dict[str, tuple[Callable[..., SimplicialComplex], bool, bool]] = {
    # name -> (builder, takes an integer parameter, declared CAT(0))
    "tetrahedron": (tetrahedron, False, True),
    "hex_disk": (hex_disk, False, True),
    "octahedron": (octahedron, False, False),
    "stacked_tets": (stacked_tets, True, True),
    "strip": (strip, True, True),
    "pentagon_join": (pentagon_join, True, False),
    "narwhal": (narwhal, True, False),
    "wheel": (wheel, True, False),
}


def generate_fixture(name: str, *params: int) -> SimplicialComplex:
    return fixture(name, *params).complex


def fixture(name: str, *params: int) -> Fixture:
    """Build a named fixture; ``wheel`` is declared CAT(0) only for k >= 6."""
    if name not in _GENERATORS:
        raise BadParams(f"unknown fixture {name!r}; choose from {', '.join(sorted(_GENERATORS))}")
    builder, takes_param, cat0 = _GENERATORS[name]
    if params and not takes_param:
        raise BadParams(f"fixture {name!r} takes no parameters")
    if len(params) > 1:
        raise BadParams(f"fixture {name!r} takes at most one parameter")
    K = builder(*params)
    if name == "wheel":
        cat0 = (params[0] if params else 6) >= 6
    return Fixture(name if not params else f"{name}:{params[0]}", K, cat0)


def parse_fixture_spec(spec: str) -> Fixture:
    """``NAME`` or ``NAME:INT``."""
    name, _, arg = spec.partition(":")
    if not arg:
        return fixture(name)
    try:
        value = int(arg)
    except ValueError:
        raise BadParams(f"fixture parameter must be an integer, got {arg!r}") from None
    return fixture(name, value)


def fixture_names() -> list[str]:
    return sorted(_GENERATORS)


def default_fixtures() -> list[Fixture]:
    """Every fixture at its default parameters, plus the three-tetrahedron wheel."""
    out = [fixture(name) for name in fixture_names()]
    out.append(fixture("wheel", 3))
    return out


def declared_cat0_fixtures() -> list[Fixture]:
    return [f for f in default_fixtures() if f.declared_cat0]

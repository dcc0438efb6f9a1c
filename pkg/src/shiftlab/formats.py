"""Reading complexes and ideals from text, and the packaged example inputs."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .algebra import Polynomial, letter_names, parse_polynomial
from .errors import ParseError
from .simplicial import SimplicialComplex, parse_complex


@dataclass
class IdealInput:
    names: list
    generators: list

    @property
    def n(self) -> int:
        return len(self.names)


def parse_ideal(text: str, field=None) -> IdealInput:
    """Ideal file: a ``vars: a,b,c`` header, then one polynomial per line.

    Blank lines and lines starting with ``#`` are ignored.

    >>> parse_ideal("vars: x,y\\nx*y\\ny^2").generators[1].terms
    {(0, 2): 1}
    """
    names = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if names is None:
            if not line.startswith("vars:"):
                raise ParseError('expected header "vars: a,b,..."', lineno, 1)
            names = [v.strip() for v in line[len("vars:"):].split(",")]
            if not names or any(not v for v in names) or len(set(names)) != len(names):
                raise ParseError("variable list must be non-empty, comma separated and distinct", lineno, 6)
            continue
        gens.append(parse_polynomial(line, names=names, field=field, line=lineno))
    if names is None:
        raise ParseError('missing header "vars: a,b,..."', 1, 1)
    return IdealInput(names, gens)


def read_input(path):
    """A complex (JSON) or an ideal file, told apart by the first character."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_complex(text)
    return parse_ideal(text)


def example_path(name: str):
    return resources.files("shiftlab") / "data" / name


def example_complex() -> SimplicialComplex:
    """The 14-facet torus on seven vertices used throughout the tests."""
    return parse_complex(example_path("example_ex.json").read_text(encoding="utf-8"))


def example_ideal() -> IdealInput:
    """The three-generator ideal in ``x, y, z``."""
    return parse_ideal(example_path("example_ex2.ideal").read_text(encoding="utf-8"))


def complex_names(K: SimplicialComplex) -> list:
    return letter_names(K.n) if K.n <= 26 else None


def monomial_generators(gens, n, field=None) -> list:
    return [Polynomial.monomial(g, 1, field) for g in gens]

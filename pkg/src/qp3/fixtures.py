"""Golden data: the reference polynomial lists for the point scheme and
line scheme, the component generators, and the named surfaces and rulings.

Fixture text keeps the parameter symbolic as 'g'; callers bind a concrete
gamma when they parse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Tuple

from .gaussian import GaussianRational, gr
from .multipoly import Polynomial, parse_poly
from .quadratic_algebra import M_VARS, X_VARS


@dataclass(frozen=True)
class FixtureSet:
    point_scheme_polys: Tuple[str, ...]     # 15 quartics in x1..x4
    line_scheme_polys: Tuple[str, ...]      # P followed by 45 quartics in M12..M34
    component_generators: Dict[str, dict]   # name -> {generators, dimension, ...}
    component_generators_gamma4: Dict[str, dict]
    component_generators_gamma_minus4: Dict[str, dict]
    surfaces: Dict[str, str]
    planar_curves: Dict[str, List[str]]
    pencil_points: Dict[str, str]
    displayed_relation_matrix: Tuple[Tuple[str, ...], ...]
    displayed_big_matrix: Tuple[Tuple[str, ...], ...]

    def parse_point_polys(self, gamma: GaussianRational) -> List[Polynomial]:
        return [parse_poly(t, X_VARS, gamma=gamma) for t in self.point_scheme_polys]

    def parse_line_polys(self, gamma: GaussianRational) -> List[Polynomial]:
        return [parse_poly(t, M_VARS, gamma=gamma) for t in self.line_scheme_polys]


def _data_file(name: str):
    return resources.files("qp3").joinpath("data", name)


def _read_poly_list(name: str) -> Tuple[str, ...]:
    text = _data_file(name).read_text()
    return tuple(ln.strip() for ln in text.splitlines()
                 if ln.strip() and not ln.strip().startswith("#"))


@lru_cache(maxsize=1)
def load_fixtures() -> FixtureSet:
    """Load and validate the shipped fixture lists."""
    point = _read_poly_list("point_scheme_minors.txt")
    line = _read_poly_list("line_scheme_polys.txt")
    comp = json.loads(_data_file("components.json").read_text())
    fs = FixtureSet(
        point_scheme_polys=point,
        line_scheme_polys=line,
        component_generators=comp["components"],
        component_generators_gamma4=comp["components_gamma4"],
        component_generators_gamma_minus4=comp["components_gamma_minus4"],
        surfaces=comp["surfaces"],
        planar_curves=comp["planar_curves"],
        pencil_points=comp["pencil_points"],
        displayed_relation_matrix=tuple(tuple(r) for r in comp["displayed_relation_matrix"]),
        displayed_big_matrix=tuple(tuple(r) for r in comp["displayed_big_matrix"]),
    )
    _validate(fs)
    return fs


def _validate(fs: FixtureSet) -> None:
    if len(fs.point_scheme_polys) != 15:
        raise ValueError(f"expected 15 point-scheme fixtures, got {len(fs.point_scheme_polys)}")
    if len(fs.line_scheme_polys) != 46:
        raise ValueError(f"expected 46 line-scheme fixtures, got {len(fs.line_scheme_polys)}")
    # every fixture must parse (probe with gamma = 1) and be homogeneous
    probe = gr(1)
    for t in fs.point_scheme_polys:
        p = parse_poly(t, X_VARS, gamma=probe)
        if not p.is_homogeneous() or p.degree() != 4:
            raise ValueError(f"point-scheme fixture not a quartic: {t}")
    for k, t in enumerate(fs.line_scheme_polys):
        p = parse_poly(t, M_VARS, gamma=probe)
        want = 2 if k == 0 else 4
        if not p.is_homogeneous() or p.degree() != want:
            raise ValueError(f"line-scheme fixture {k} has wrong degree: {t}")

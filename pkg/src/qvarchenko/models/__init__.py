"""Closed-form model families and a catalogue keyed by id."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..geometry import Arrangement
from ..matrix import PolyMat
from ..poly import PolyZ
from . import cyclic, dihedral, platonic, pyramid, shapes
from .structured import StructuredVector

Factor = Tuple[str, PolyMat]


@dataclass(frozen=True)
class ModelSpec:
    """One model: its matrix, transition pipelines, claimed diagonal and geometry.

    ``left_pipeline`` and ``right_pipeline`` are ``(name, matrix)`` pairs; the
    diagonal form is ``left[0] @ ... @ V @ ... @ right[-1]``.
    """

    id: str
    n: Optional[int]
    varchenko: PolyMat
    left_pipeline: Tuple[Factor, ...]
    right_pipeline: Tuple[Factor, ...]
    claimed_snf: Tuple[PolyZ, ...]
    region_labels: Tuple[frozenset, ...]
    arrangement: Arrangement
    base_point: tuple
    notes: Tuple[str, ...] = field(default=())

    @property
    def size(self) -> int:
        return self.varchenko.rows

    @property
    def title(self) -> str:
        name = self.id.capitalize()
        return f"{name}({self.n})" if self.n is not None else name


def _mirror(left: Sequence[Factor]) -> Tuple[Factor, ...]:
    return tuple((f"{name}^t", m.T) for name, m in reversed(left))


def cyclic_model(n: int) -> ModelSpec:
    p, s = cyclic.cyclic_transforms(n)
    left = (("S", s), ("P", p))
    return ModelSpec(
        id="cyclic", n=n,
        varchenko=cyclic.cyclic_varchenko(n),
        left_pipeline=left, right_pipeline=_mirror(left),
        claimed_snf=tuple(cyclic.cyclic_claimed_snf(n)),
        region_labels=tuple(cyclic.cyclic_labels(n)),
        arrangement=shapes.polygon_arrangement(n),
        base_point=shapes.CENTRE_2D,
    )


def dihedral_model(n: int) -> ModelSpec:
    p, s, t, r = dihedral.dihedral_transforms(n)
    left = (("R", r), ("T", t), ("S", s), ("P", p))
    return ModelSpec(
        id="dihedral", n=n,
        varchenko=dihedral.dihedral_varchenko(n),
        left_pipeline=left, right_pipeline=_mirror(left),
        claimed_snf=tuple(dihedral.dihedral_claimed_snf(n)),
        region_labels=tuple(dihedral.dihedral_labels(n)),
        arrangement=shapes.prism_arrangement(n),
        base_point=shapes.ABOVE_BASE,
    )


def platonic_model(which: str) -> ModelSpec:
    which = which.lower()
    if which == "tetrahedron":
        left = (("P", platonic.tetrahedron_transform()),)
        right = _mirror(left)
        v = platonic.tetrahedron_varchenko()
        claimed = platonic.tetrahedron_claimed_snf()
        labels = platonic.tetrahedron_labels()
        arr = shapes.tetrahedron_arrangement()
        notes = ()
    elif which == "cube":
        left = (("U", platonic.cube_transform()),)
        right = _mirror(left)
        v = platonic.cube_varchenko()
        claimed = platonic.cube_claimed_snf()
        labels = platonic.cube_labels()
        arr = shapes.cube_arrangement()
        notes = ()
    elif which == "octahedron":
        lm, u, rm = platonic.octahedron_transforms()
        left = (("L", lm), ("U", u))
        right = (("U^t", u.T), ("R", rm))
        v = platonic.octahedron_varchenko()
        claimed = platonic.octahedron_claimed_snf()
        labels = platonic.octahedron_labels()
        arr = shapes.octahedron_arrangement()
        notes = tuple(
            f"block v_{i},{j}: printed word {printed} replaced by {used}"
            for (i, j), (printed, used) in platonic.OCTAHEDRON_CORRECTIONS.items()
        ) + ("last six diagonal entries read as (1-q^2)^2 (1-q^8)",)
    else:
        raise ValueError(f"unknown platonic solid {which!r}")
    return ModelSpec(
        id=which, n=None, varchenko=v,
        left_pipeline=left, right_pipeline=right,
        claimed_snf=tuple(claimed), region_labels=tuple(labels),
        arrangement=arr, base_point=shapes.CENTRE_3D, notes=notes,
    )


def pyramid_model(n: int) -> ModelSpec:
    if n == 4:
        w, lm, t, p, rm = pyramid.pyramid4_transforms()
        v = pyramid.pyramid4_varchenko()
        claimed = pyramid.pyramid4_claimed_snf()
        labels = pyramid.pyramid4_labels()
    elif n == 5:
        w, lm, t, p, rm = pyramid.pyramid5_transforms()
        v = pyramid.pyramid5_varchenko()
        claimed = pyramid.pyramid5_claimed_snf()
        labels = pyramid.pyramid5_labels()
    else:
        raise ValueError(f"pyramid model exists for n = 4, 5 only, got {n}")
    left = (("W", w), ("L", lm), ("T", t), ("P", p))
    right = (("P^t", p.T), ("T^t", t.T), ("R", rm), ("W^t", w.T))
    return ModelSpec(
        id=f"pyramid{n}", n=None, varchenko=v,
        left_pipeline=left, right_pipeline=right,
        claimed_snf=tuple(claimed), region_labels=tuple(labels),
        arrangement=shapes.pyramid_arrangement(n), base_point=shapes.ABOVE_BASE,
    )


@dataclass(frozen=True)
class CatalogueEntry:
    id: str
    description: str
    build: Callable[[Optional[int]], ModelSpec]
    needs_n: bool = False


CATALOGUE: Dict[str, CatalogueEntry] = {
    e.id: e
    for e in (
        CatalogueEntry("cyclic", "edge lines of a regular n-gon", cyclic_model, True),
        CatalogueEntry("dihedral", "n-gon prism walls plus one transverse plane", dihedral_model, True),
        CatalogueEntry("tetrahedron", "face planes of a regular tetrahedron", lambda _: platonic_model("tetrahedron")),
        CatalogueEntry("cube", "face planes of a cube", lambda _: platonic_model("cube")),
        CatalogueEntry("octahedron", "face planes of a regular octahedron", lambda _: platonic_model("octahedron")),
        CatalogueEntry("pyramid4", "square pyramid: four sides through the apex and the base", lambda _: pyramid_model(4)),
        CatalogueEntry("pyramid5", "pentagonal pyramid: five sides through the apex and the base", lambda _: pyramid_model(5)),
    )
}


def get_model(model_id: str, n: Optional[int] = None) -> ModelSpec:
    """Build a catalogue model; ``n`` is required for the cyclic and dihedral families."""
    entry = CATALOGUE.get(model_id.lower())
    if entry is None:
        raise KeyError(f"unknown model {model_id!r}; choose from {', '.join(CATALOGUE)}")
    if entry.needs_n:
        if n is None:
            raise ValueError(f"model {entry.id!r} needs --n")
        if n < 3:
            raise ValueError(f"model {entry.id!r} needs n >= 3, got {n}")
    return entry.build(n)


__all__ = [
    "CATALOGUE", "CatalogueEntry", "ModelSpec", "StructuredVector",
    "cyclic_model", "dihedral_model", "get_model", "platonic_model", "pyramid_model",
]

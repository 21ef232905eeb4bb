"""JSON file formats for R-matrices, Hopf algebras and comodules.

Every scalar is written as a "num/den" string. Loading wraps missing files,
malformed JSON and schema violations in ``InputFormatError``.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Type, TypeVar, Union

from loguru import logger
from pydantic import BaseModel, ValidationError, field_validator, model_validator

from ..hecke.symmetry import HeckeSymmetry, is_valid_q, manin_standard, super_flip
from ..hopf.algebra import HopfAlgebra
from ..hopf.comodule import Comodule, make_comodule
from ..linalg.matrix import ZERO, Matrix, format_scalar, to_scalar
from ..utils.exceptions import InputFormatError

PathLike = Union[str, Path]
Model = TypeVar("Model", bound=BaseModel)

BUILTIN_FAMILIES = {
    "manin_standard": manin_standard,
    "super_flip": lambda q: super_flip(),
}


def _parse_scalar(value: str) -> str:
    try:
        return format_scalar(to_scalar(value))
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise ValueError(f"not an exact rational: {value!r}") from e


class RMatrixFile(BaseModel):
    name: Optional[str] = None
    dim: int
    q: str
    # second eigenvalue of the Hecke relation
    lower: str = "-1/1"
    # [out_pair_index, in_pair_index, value], pair index i*dim + j
    entries: List[Tuple[int, int, str]]

    @field_validator("q", "lower")
    @classmethod
    def _q(cls, v: str) -> str:
        return _parse_scalar(v)

    @field_validator("entries")
    @classmethod
    def _entries(cls, v):
        return [(r, c, _parse_scalar(x)) for r, c, x in v]

    @model_validator(mode="after")
    def _indices(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if to_scalar(self.lower) == 0:
            raise ValueError("lower eigenvalue must be nonzero")
        size = self.dim * self.dim
        for r, c, _ in self.entries:
            if not (0 <= r < size and 0 <= c < size):
                raise ValueError(f"pair index ({r}, {c}) outside 0..{size - 1}")
        return self

    def to_symmetry(self) -> HeckeSymmetry:
        size = self.dim * self.dim
        r = Matrix.from_entries(size, size, ((i, j, to_scalar(x)) for i, j, x in self.entries))
        h = HeckeSymmetry(self.dim, to_scalar(self.q), r, lower=to_scalar(self.lower), name=self.name or "R")
        # a file holding a builtin family gets the family back, so it can be respecialized
        builtin = BUILTIN_FAMILIES.get(h.name)
        if builtin is not None and is_valid_q(h.q):
            candidate = builtin(h.q)
            if candidate == h:
                return candidate
        return h

    @classmethod
    def from_symmetry(cls, h: HeckeSymmetry) -> "RMatrixFile":
        return cls(
            name=h.name,
            dim=h.dim,
            q=format_scalar(h.q),
            lower=format_scalar(h.lower),
            entries=[(i, j, format_scalar(v)) for i, j, v in h.r_matrix.nonzero()],
        )


class HopfFile(BaseModel):
    name: Optional[str] = None
    basis: List[str]
    # coefficient vector of the unit; defaults to the first basis element
    unit: Optional[List[str]] = None
    # [i, j, t, value]: e_i·e_j has coefficient value on e_t
    mult: List[Tuple[int, int, int, str]]
    # [i, j, k, value]: Δ(e_i) contains value·e_j⊗e_k
    comult: List[Tuple[int, int, int, str]]
    counit: List[str]
    # antipode[r][c] = coefficient of e_r in S(e_c)
    antipode: List[List[str]]

    @field_validator("unit", "counit")
    @classmethod
    def _vectors(cls, v):
        return None if v is None else [_parse_scalar(x) for x in v]

    @field_validator("mult", "comult")
    @classmethod
    def _triples(cls, v):
        return [(a, b, c, _parse_scalar(x)) for a, b, c, x in v]

    @field_validator("antipode")
    @classmethod
    def _matrix(cls, v):
        return [[_parse_scalar(x) for x in row] for row in v]

    @model_validator(mode="after")
    def _shapes(self):
        n = len(self.basis)
        if n == 0:
            raise ValueError("empty basis")
        if len(set(self.basis)) != n:
            raise ValueError("basis names must be distinct")
        if len(self.counit) != n or (self.unit is not None and len(self.unit) != n):
            raise ValueError(f"unit and counit need {n} entries")
        if len(self.antipode) != n or any(len(row) != n for row in self.antipode):
            raise ValueError(f"antipode must be {n}x{n}")
        for entry in self.mult + self.comult:
            if not all(0 <= k < n for k in entry[:3]):
                raise ValueError(f"index out of range in {list(entry)}")
        return self

    def to_algebra(self) -> HopfAlgebra:
        n = len(self.basis)
        mult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i, j, t, x in self.mult:
            mult[i][j][t] += to_scalar(x)
        comult: List[List[Tuple[int, int, Fraction]]] = [[] for _ in range(n)]
        for i, j, k, x in self.comult:
            comult[i].append((j, k, to_scalar(x)))
        unit = [to_scalar(x) for x in self.unit] if self.unit else [Fraction(int(k == 0)) for k in range(n)]
        return HopfAlgebra(
            basis_names=tuple(self.basis),
            mult=tuple(tuple(tuple(v) for v in row) for row in mult),
            unit=tuple(unit),
            comult=tuple(tuple(triples) for triples in comult),
            counit=tuple(to_scalar(x) for x in self.counit),
            antipode=Matrix.from_rows([[to_scalar(x) for x in row] for row in self.antipode]),
            name=self.name or "H",
        )

    @classmethod
    def from_algebra(cls, h: HopfAlgebra) -> "HopfFile":
        n = h.n
        return cls(
            name=h.name,
            basis=list(h.basis_names),
            unit=[format_scalar(x) for x in h.unit],
            mult=[
                (i, j, t, format_scalar(c))
                for i in range(n)
                for j in range(n)
                for t, c in enumerate(h.mult[i][j])
                if c
            ],
            comult=[(i, j, k, format_scalar(c)) for i in range(n) for j, k, c in h.comult[i]],
            counit=[format_scalar(x) for x in h.counit],
            antipode=[[format_scalar(x) for x in h.antipode.row(r)] for r in range(n)],
        )


class ComoduleFile(BaseModel):
    name: Optional[str] = None
    dim: int
    # coaction[i] lists [v_out, h_index, value] for ρ(v_i)
    coaction: List[List[Tuple[int, int, str]]]

    @field_validator("coaction")
    @classmethod
    def _coaction(cls, v):
        return [[(j, t, _parse_scalar(x)) for j, t, x in triples] for triples in v]

    @model_validator(mode="after")
    def _shape(self):
        if len(self.coaction) != self.dim:
            raise ValueError(f"coaction lists {len(self.coaction)} vectors for dim {self.dim}")
        for triples in self.coaction:
            for j, t, _ in triples:
                if not 0 <= j < self.dim or t < 0:
                    raise ValueError(f"bad coaction index ({j}, {t})")
        return self

    def to_comodule(self) -> Comodule:
        return make_comodule(self.dim, self.coaction, name=self.name or "M")

    @classmethod
    def from_comodule(cls, m: Comodule) -> "ComoduleFile":
        return cls(
            name=m.name,
            dim=m.dim,
            coaction=[[(j, t, format_scalar(c)) for j, t, c in triples] for triples in m.coaction],
        )


# ---------------------------------------------------------------------- disk


def _load(path: PathLike, model: Type[Model]) -> Model:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
        return model.model_validate(raw)
    except FileNotFoundError as e:
        raise InputFormatError(f"{path}: no such file") from e
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path}: invalid JSON ({e})") from e
    except ValidationError as e:
        raise InputFormatError(f"{path}: {model.__name__} schema violation: {e}") from e


def load_rmatrix(path: PathLike) -> HeckeSymmetry:
    return _load(path, RMatrixFile).to_symmetry()


def load_hopf(path: PathLike) -> HopfAlgebra:
    return _load(path, HopfFile).to_algebra()


def load_comodule(path: PathLike) -> Comodule:
    return _load(path, ComoduleFile).to_comodule()


def dump(model: BaseModel, path: PathLike):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(model.model_dump(exclude_none=True), indent=2) + "\n")
    logger.debug(f"wrote {path}")


def to_json(model: BaseModel) -> Dict:
    return model.model_dump(exclude_none=True)

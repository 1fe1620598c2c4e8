"""Interchange files: Pydantic schemas, loaders into in-memory objects, and dumpers back out.

Indices are 1-based in files and 0-based in memory. Scalars are strings
("3", "-1/2"); plain JSON integers are accepted on input.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Annotated, Any, Literal, Union

from pydantic import BaseModel, BeforeValidator, Field, model_validator

from leibniz.errors import InputError, MixedFieldContext, ShapeMismatch
from leibniz.kernel.fields import FieldContext
from leibniz.kernel.tensors import Matrix, Tensor
from leibniz.models.algebra import DendriformAlgebra, LeibnizAlgebra, QuadraticStructure, Representation
from leibniz.models.cochain import MultilinearMap, SplitSignature
from leibniz.models.operators import RMatrix
from leibniz.models.pairs import BialgebraPair, ManinTriple, MatchedPairData, SplitAlgebra
from leibniz.models.report import matrix_payload

logger = logging.getLogger(__name__)


def _scalar_text(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


ScalarText = Annotated[str, BeforeValidator(_scalar_text)]
MatrixRows = list[list[ScalarText]]


# ---------------------------------------------------------------------------
# Pydantic models
# ---------------------------------------------------------------------------

class FieldSpec(BaseModel):
    kind: Literal["rational", "prime"] = "rational"
    p: int | None = None

    @model_validator(mode="after")
    def _prime_needs_modulus(self) -> FieldSpec:
        if self.kind == "prime" and self.p is None:
            raise ValueError("a prime field needs its modulus p")
        if self.kind == "rational" and self.p is not None:
            raise ValueError("the rational field takes no modulus")
        return self

    @classmethod
    def of(cls, field: FieldContext) -> FieldSpec:
        return cls(kind=field.kind, p=field.p)


class BracketEntry(BaseModel):
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    out: dict[str, ScalarText]


class AlgebraFile(BaseModel):
    field: FieldSpec | None = None
    dim: int = Field(ge=1)
    brackets: list[BracketEntry] = Field(default_factory=list)
    labels: list[str] | None = None


class RepresentationFile(BaseModel):
    """Actions of an algebra on a carrier; the algebra itself may be embedded."""

    field: FieldSpec | None = None
    dim: int | None = Field(default=None, ge=1)
    brackets: list[BracketEntry] | None = None
    carrier_dim: int = Field(ge=1)
    rhoL: list[MatrixRows]
    rhoR: list[MatrixRows]


class OperatorFile(BaseModel):
    field: FieldSpec | None = None
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    matrix: MatrixRows


class MapEntry(BaseModel):
    inputs: list[int] = Field(alias="in")
    out: dict[str, ScalarText]

    model_config = {"populate_by_name": True}


class MultilinearMapFile(BaseModel):
    field: FieldSpec | None = None
    dim: int = Field(ge=1)
    arity: int = Field(ge=1)
    target_dim: int | None = Field(default=None, ge=1)
    entries: list[MapEntry] = Field(default_factory=list)


class SplitFile(BaseModel):
    algebra: AlgebraFile
    d1: int = Field(ge=0)


class BialgebraFile(BaseModel):
    g: AlgebraFile
    gstar: AlgebraFile


class MatchedPairFile(BaseModel):
    g1: AlgebraFile
    g2: AlgebraFile
    rho1L: list[MatrixRows]
    rho1R: list[MatrixRows]
    rho2L: list[MatrixRows]
    rho2R: list[MatrixRows]


class TensorEntry(BaseModel):
    index: list[int]
    coeff: ScalarText


class TensorFile(BaseModel):
    field: FieldSpec | None = None
    order: int = Field(ge=1)
    dim: int = Field(ge=1)
    entries: list[TensorEntry] = Field(default_factory=list)


class RMatrixEntry(BaseModel):
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    coeff: ScalarText


class RMatrixFile(BaseModel):
    """An r-matrix; ``algebra`` is an embedded algebra or a path relative to this file."""

    algebra: Union[AlgebraFile, str, None] = None
    r: list[RMatrixEntry] = Field(default_factory=list)


class DendriformFile(BaseModel):
    field: FieldSpec | None = None
    dim: int = Field(ge=1)
    left: list[BracketEntry] = Field(default_factory=list)
    right: list[BracketEntry] = Field(default_factory=list)


class QuadraticFile(BaseModel):
    algebra: AlgebraFile
    form: MatrixRows
    d1: int | None = Field(default=None, ge=0)


# ---------------------------------------------------------------------------
# Field resolution
# ---------------------------------------------------------------------------

def resolve_field(*specs: FieldSpec | None, prime: int | None = None) -> FieldContext:
    """One field for a whole problem.

    Without ``prime`` every declared field must agree (undeclared means rational).
    With ``prime`` rational declarations are reinterpreted in F_p and a
    different declared prime is an error.
    """
    declared = {(s.kind, s.p) for s in specs if s is not None}
    if prime is not None:
        others = sorted(p for kind, p in declared if kind == "prime" and p != prime)
        if others:
            raise InputError(f"file declares F_{others[0]} but --prime {prime} was given")
        return FieldContext.prime(prime)
    if not declared:
        return FieldContext.rational()
    if len(declared) > 1:
        raise MixedFieldContext("input files declare different fields")
    kind, p = declared.pop()
    return FieldContext.rational() if kind == "rational" else FieldContext.prime(p)


def declared_fields(doc: BaseModel) -> list[FieldSpec]:
    """Every field declaration in a document, nested ones included."""
    found = []
    for name in type(doc).model_fields:
        value = getattr(doc, name)
        if isinstance(value, FieldSpec):
            found.append(value)
        elif isinstance(value, BaseModel):
            found.extend(declared_fields(value))
    return found


def field_for(*docs: BaseModel | None, prime: int | None = None) -> FieldContext:
    specs = [spec for doc in docs if doc is not None for spec in declared_fields(doc)]
    return resolve_field(*specs, prime=prime)


def _check_declared(spec: FieldSpec | None, field: FieldContext) -> None:
    if spec is None:
        return
    if spec.kind == "prime" and spec.p != field.p:
        raise MixedFieldContext(f"F_{spec.p} data used in a problem over {field.label}")


# ---------------------------------------------------------------------------
# Loaders
# ---------------------------------------------------------------------------

def read_document(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _index(value: int, dim: int, what: str) -> int:
    if not 1 <= value <= dim:
        raise ShapeMismatch(f"{what} index {value} out of range 1..{dim}")
    return value - 1


def parse_matrix(field: FieldContext, rows: MatrixRows, shape: tuple[int, int] | None = None) -> Matrix:
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ShapeMismatch("matrix rows must be nonempty and of equal length")
    m = Matrix.from_rows(field, [[field.parse(x) for x in row] for row in rows])
    if shape is not None and (m.rows, m.cols) != shape:
        raise ShapeMismatch(f"expected a {shape[0]}x{shape[1]} matrix, got {m.rows}x{m.cols}")
    return m


def _output_index(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"output index {text!r} is not an integer") from None


def _constants(field: FieldContext, dim: int, entries: list[BracketEntry]) -> Tensor:
    data: dict[tuple, Any] = {}
    for entry in entries:
        i, j = _index(entry.i, dim, "bracket"), _index(entry.j, dim, "bracket")
        for k_text, coeff in entry.out.items():
            key = (i, j, _index(_output_index(k_text), dim, "output"))
            data[key] = data.get(key, field.zero) + field.parse(coeff)
    return Tensor.from_entries(field, (dim, dim, dim), data)


def load_algebra(doc: AlgebraFile, field: FieldContext) -> LeibnizAlgebra:
    """Structure constants only; callers verify the Leibniz identity."""
    _check_declared(doc.field, field)
    labels = tuple(doc.labels) if doc.labels is not None else None
    return LeibnizAlgebra(_constants(field, doc.dim, doc.brackets), labels)


def load_representation(doc: RepresentationFile, field: FieldContext, algebra: LeibnizAlgebra | None) -> Representation:
    _check_declared(doc.field, field)
    if doc.dim is not None:
        embedded = LeibnizAlgebra(_constants(field, doc.dim, doc.brackets or []))
        if algebra is not None and embedded.constants != algebra.constants:
            raise InputError("representation file embeds a different algebra")
        algebra = algebra or embedded
    if algebra is None:
        raise InputError("representation file does not name its algebra")
    m = doc.carrier_dim
    left = tuple(parse_matrix(field, rows, (m, m)) for rows in doc.rhoL)
    right = tuple(parse_matrix(field, rows, (m, m)) for rows in doc.rhoR)
    return Representation(algebra, left, right)


def load_operator(doc: OperatorFile, field: FieldContext) -> Matrix:
    _check_declared(doc.field, field)
    return parse_matrix(field, doc.matrix, (doc.rows, doc.cols))


def load_map(doc: MultilinearMapFile, field: FieldContext) -> MultilinearMap:
    _check_declared(doc.field, field)
    target = doc.target_dim or doc.dim
    f = MultilinearMap.zero(field, doc.dim, doc.arity, target)
    coeffs = list(f.coeffs)
    for entry in doc.entries:
        if len(entry.inputs) != doc.arity:
            raise ShapeMismatch(f"entry with {len(entry.inputs)} inputs for a map of arity {doc.arity}")
        args = tuple(_index(i, doc.dim, "input") for i in entry.inputs)
        base = f.offset(args)
        for j_text, coeff in entry.out.items():
            j = _index(_output_index(j_text), target, "output")
            coeffs[base + j] += field.parse(coeff)
    return MultilinearMap(field, doc.dim, doc.arity, tuple(coeffs), target)


def load_tensor(doc: TensorFile, field: FieldContext) -> Tensor:
    _check_declared(doc.field, field)
    shape = (doc.dim,) * doc.order
    data: dict[tuple, Any] = {}
    for entry in doc.entries:
        if len(entry.index) != doc.order:
            raise ShapeMismatch(f"index of length {len(entry.index)} in an order-{doc.order} tensor")
        key = tuple(_index(i, doc.dim, "tensor") for i in entry.index)
        data[key] = data.get(key, field.zero) + field.parse(entry.coeff)
    return Tensor.from_entries(field, shape, data)


def load_split(doc: SplitFile, field: FieldContext) -> SplitAlgebra:
    algebra = load_algebra(doc.algebra, field)
    return SplitAlgebra(algebra, SplitSignature(doc.d1, algebra.dim - doc.d1))


def load_bialgebra(doc: BialgebraFile, field: FieldContext) -> BialgebraPair:
    return BialgebraPair(load_algebra(doc.g, field), load_algebra(doc.gstar, field))


def load_matched_pair(doc: MatchedPairFile, field: FieldContext) -> MatchedPairData:
    g1, g2 = load_algebra(doc.g1, field), load_algebra(doc.g2, field)
    n1, n2 = g1.dim, g2.dim
    rho1 = Representation(
        g1,
        tuple(parse_matrix(field, r, (n2, n2)) for r in doc.rho1L),
        tuple(parse_matrix(field, r, (n2, n2)) for r in doc.rho1R),
    )
    rho2 = Representation(
        g2,
        tuple(parse_matrix(field, r, (n1, n1)) for r in doc.rho2L),
        tuple(parse_matrix(field, r, (n1, n1)) for r in doc.rho2R),
    )
    return MatchedPairData(rho1, rho2)


def rmatrix_algebra_doc(doc: RMatrixFile, base: Path | None) -> AlgebraFile | None:
    """The algebra an r-matrix file refers to, reading it from disk when given as a path."""
    if isinstance(doc.algebra, str):
        path = Path(doc.algebra)
        if base is not None and not path.is_absolute():
            path = base / path
        return AlgebraFile.model_validate(read_document(path))
    return doc.algebra


def load_rmatrix(doc: RMatrixFile, field: FieldContext, algebra: LeibnizAlgebra) -> RMatrix:
    n = algebra.dim
    data: dict[tuple, Any] = {}
    for entry in doc.r:
        key = (_index(entry.i, n, "r-matrix"), _index(entry.j, n, "r-matrix"))
        data[key] = data.get(key, field.zero) + field.parse(entry.coeff)
    return RMatrix(algebra, Tensor.from_entries(field, (n, n), data))


def load_dendriform(doc: DendriformFile, field: FieldContext) -> DendriformAlgebra:
    _check_declared(doc.field, field)
    return DendriformAlgebra(_constants(field, doc.dim, doc.left), _constants(field, doc.dim, doc.right))


def load_quadratic(doc: QuadraticFile, field: FieldContext) -> tuple[QuadraticStructure, SplitSignature | None]:
    algebra = load_algebra(doc.algebra, field)
    qs = QuadraticStructure(algebra, parse_matrix(field, doc.form, (algebra.dim, algebra.dim)))
    sig = SplitSignature(doc.d1, algebra.dim - doc.d1) if doc.d1 is not None else None
    return qs, sig


# ---------------------------------------------------------------------------
# Dumpers
# ---------------------------------------------------------------------------

def dump_matrix(m: Matrix) -> MatrixRows:
    return matrix_payload(m)


def _bracket_entries(t: Tensor) -> list[BracketEntry]:
    grouped: dict[tuple[int, int], dict[str, str]] = {}
    for (i, j, k), c in t.entries():
        grouped.setdefault((i, j), {})[str(k + 1)] = t.field.format(c)
    return [BracketEntry(i=i + 1, j=j + 1, out=out) for (i, j), out in grouped.items()]


def dump_algebra(algebra: LeibnizAlgebra) -> AlgebraFile:
    return AlgebraFile(
        field=FieldSpec.of(algebra.field),
        dim=algebra.dim,
        brackets=_bracket_entries(algebra.constants),
        labels=list(algebra.labels) if algebra.labels is not None else None,
    )


def dump_representation(rep: Representation) -> RepresentationFile:
    alg = dump_algebra(rep.algebra)
    return RepresentationFile(
        field=alg.field,
        dim=alg.dim,
        brackets=alg.brackets,
        carrier_dim=rep.carrier_dim,
        rhoL=[dump_matrix(a) for a in rep.rho_left],
        rhoR=[dump_matrix(a) for a in rep.rho_right],
    )


def dump_operator(m: Matrix) -> OperatorFile:
    return OperatorFile(field=FieldSpec.of(m.field), rows=m.rows, cols=m.cols, matrix=dump_matrix(m))


def dump_map(f: MultilinearMap) -> MultilinearMapFile:
    grouped: dict[tuple, dict[str, str]] = {}
    for args, j, x in f.nonzero_entries():
        grouped.setdefault(args, {})[str(j + 1)] = f.field.format(x)
    return MultilinearMapFile(
        field=FieldSpec.of(f.field),
        dim=f.source_dim,
        arity=f.arity,
        target_dim=f.target_dim if f.target_dim != f.source_dim else None,
        entries=[MapEntry(inputs=[i + 1 for i in args], out=out) for args, out in grouped.items()],
    )


def dump_tensor(t: Tensor) -> TensorFile:
    if len(set(t.shape)) != 1:
        raise ShapeMismatch(f"only tensors on one space are written, got shape {list(t.shape)}")
    return TensorFile(
        field=FieldSpec.of(t.field),
        order=t.order,
        dim=t.shape[0],
        entries=[TensorEntry(index=[i + 1 for i in index], coeff=t.field.format(c)) for index, c in t.entries()],
    )


def dump_split(sa: SplitAlgebra) -> SplitFile:
    return SplitFile(algebra=dump_algebra(sa.algebra), d1=sa.sig.d1)


def dump_bialgebra(pair: BialgebraPair) -> BialgebraFile:
    return BialgebraFile(g=dump_algebra(pair.g), gstar=dump_algebra(pair.gstar))


def dump_matched_pair(mp: MatchedPairData) -> MatchedPairFile:
    return MatchedPairFile(
        g1=dump_algebra(mp.g1),
        g2=dump_algebra(mp.g2),
        rho1L=[dump_matrix(a) for a in mp.rho1.rho_left],
        rho1R=[dump_matrix(a) for a in mp.rho1.rho_right],
        rho2L=[dump_matrix(a) for a in mp.rho2.rho_left],
        rho2R=[dump_matrix(a) for a in mp.rho2.rho_right],
    )


def dump_rmatrix(rm: RMatrix) -> RMatrixFile:
    f = rm.r.field
    return RMatrixFile(
        algebra=dump_algebra(rm.algebra),
        r=[RMatrixEntry(i=i + 1, j=j + 1, coeff=f.format(c)) for (i, j), c in rm.r.entries()],
    )


def dump_dendriform(A: DendriformAlgebra) -> DendriformFile:
    return DendriformFile(
        field=FieldSpec.of(A.field),
        dim=A.dim,
        left=_bracket_entries(A.left),
        right=_bracket_entries(A.right),
    )


def dump_manin(triple: ManinTriple) -> QuadraticFile:
    return QuadraticFile(algebra=dump_algebra(triple.algebra), form=dump_matrix(triple.omega), d1=triple.sig.d1)


def dump_quadratic(qs: QuadraticStructure, d1: int | None = None) -> QuadraticFile:
    return QuadraticFile(algebra=dump_algebra(qs.algebra), form=dump_matrix(qs.omega), d1=d1)


def to_json(model: BaseModel | dict, pretty: bool = False) -> str:
    """Deterministic JSON: sorted keys, ``None`` members dropped."""
    payload = model.model_dump(by_alias=True, exclude_none=True) if isinstance(model, BaseModel) else model
    return json.dumps(payload, sort_keys=True, indent=2 if pretty else None, ensure_ascii=False)

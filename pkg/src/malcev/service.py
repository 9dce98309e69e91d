"""HTTP facade over the library: every CLI operation as a JSON endpoint.

The app is self-contained and stateless, so it can run in-process (the CLI
default) or under uvicorn for remote use.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import closedform, octonion, quotient
from .core import (
    FiniteAlgebra,
    algebra_from_json,
    catalog,
    verify_variety,
)
from .envelope import (
    EnvContext,
    alternator_left,
    alternator_right,
    el_monomial,
    env_to_json,
    format_env,
    format_monomial,
    monomials_up_to,
    parse_monomial,
    product,
)
from .identities import bol_from_right_alternative, decompose_g, lts_bol_data, verify_bol
from .reports import Failure, VerificationReport

CATALOG_NAMES = ("S", "T", "A4", "M_nonsplit", "M_split", "sl2", "LV5", "octonions")

VARIETIES = (
    "anticommutative",
    "jacobi",
    "malcev",
    "left-alternative",
    "right-alternative",
    "third-power-associative",
    "associative",
)

app = FastAPI(title="malcev", description="exact Malcev-envelope computations")


class AlgebraSource(BaseModel):
    algebra: Optional[str] = Field(default=None, description="catalog name")
    algebra_json: Optional[dict] = Field(default=None, description="inline structure constants")


def resolve_algebra(src: AlgebraSource) -> FiniteAlgebra:
    if src.algebra_json is not None:
        try:
            return algebra_from_json(src.algebra_json)
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise HTTPException(status_code=400, detail=f"bad algebra JSON: {exc}")
    if src.algebra is None:
        raise HTTPException(status_code=400, detail="no algebra given")
    if src.algebra not in CATALOG_NAMES:
        raise HTTPException(status_code=400, detail=f"unknown catalog algebra {src.algebra!r}")
    return catalog(src.algebra)


class ReportModel(BaseModel):
    title: str
    passed: bool
    checks: int
    failures: list[dict]

    @classmethod
    def from_report(cls, rep: VerificationReport) -> "ReportModel":
        return cls(**rep.to_dict())


class CatalogEntry(BaseModel):
    name: str
    dim: int
    labels: list[str]


@app.get("/catalog", response_model=list[CatalogEntry])
def catalog_list() -> list[CatalogEntry]:
    out = []
    for name in CATALOG_NAMES:
        A = catalog(name)
        out.append(CatalogEntry(name=name, dim=A.dim, labels=list(A.labels)))
    return out


class VerifyRequest(AlgebraSource):
    variety: Literal[VARIETIES]


@app.post("/verify", response_model=ReportModel)
def verify(req: VerifyRequest) -> ReportModel:
    A = resolve_algebra(req)
    return ReportModel.from_report(verify_variety(A, req.variety))


class MultiplyRequest(AlgebraSource):
    engine: Literal["generic", "closedform", "quotient"] = "generic"
    m1: str
    m2: str


class ElementModel(BaseModel):
    element: list[dict]
    pretty: str


def _closed_product_for(A: FiniteAlgebra):
    if A.name == "S":
        return closedform.us_product
    if A.name == "T":
        return closedform.ut_product
    raise HTTPException(status_code=400, detail=f"no closed form for algebra {A.name!r}")


def _quotient_product_for(A: FiniteAlgebra):
    if A.name == "S":
        return quotient.as_product
    if A.name == "T":
        return quotient.at_product
    raise HTTPException(status_code=400, detail=f"no alternative quotient for algebra {A.name!r}")


@app.post("/multiply", response_model=ElementModel)
def multiply(req: MultiplyRequest) -> ElementModel:
    A = resolve_algebra(req)
    try:
        x = parse_monomial(A.labels, req.m1)
        y = parse_monomial(A.labels, req.m2)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    if req.engine == "generic":
        try:
            ctx = EnvContext(A)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        result = product(ctx, el_monomial(x), el_monomial(y))
    elif req.engine == "closedform":
        result = _closed_product_for(A)(x, y)
    else:
        try:
            result = _quotient_product_for(A)(x, y)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
    return ElementModel(element=env_to_json(result), pretty=format_env(A.labels, result))


class AlternatorEntry(BaseModel):
    name: str
    element: list[dict]
    pretty: str
    reduced_pretty: str


class AlternatorsRequest(AlgebraSource):
    pass


@app.post("/alternators", response_model=list[AlternatorEntry])
def alternators(req: AlternatorsRequest) -> list[AlternatorEntry]:
    A = resolve_algebra(req)
    if A.name not in ("S", "T"):
        raise HTTPException(status_code=400, detail=f"no alternator table for algebra {A.name!r}")
    ctx = EnvContext(A)
    ideal = quotient.ideal_for(A.name)

    def mono(text):
        return el_monomial(parse_monomial(A.labels, text))

    if A.name == "S":
        items = [
            ("(a,bc,bc)", alternator_right(ctx, mono("bc"), mono("a"))),
            ("(b,ac,ac)", alternator_right(ctx, mono("ac"), mono("b"))),
            ("(c,ab,ab)", alternator_right(ctx, mono("ab"), mono("c"))),
        ]
    else:
        items = [
            ("(ab,ab,d)", alternator_left(ctx, mono("ab"), mono("d"))),
            ("(bd,bd,a^2)", alternator_left(ctx, mono("bd"), mono("a^2"))),
        ]
    out = []
    for name, value in items:
        reduced = quotient.reduce(ideal, value)
        out.append(
            AlternatorEntry(
                name=name,
                element=env_to_json(value),
                pretty=format_env(A.labels, value),
                reduced_pretty=format_env(A.labels, reduced),
            )
        )
    return out


class CrosscheckRequest(AlgebraSource):
    cap: int = Field(default=3, ge=0)
    jobs: int = Field(default=1, ge=1)


def run_crosscheck(A: FiniteAlgebra, cap: int, jobs: int = 1) -> VerificationReport:
    """Generic engine vs closed form on all monomial pairs of degree <= cap."""
    closed = closedform.us_product if A.name == "S" else closedform.ut_product
    ctx = EnvContext(A)
    monos = monomials_up_to(A.dim, cap)
    pairs = [(x, y) for x in monos for y in monos]
    rep = VerificationReport(f"U({A.name}) crosscheck to degree {cap}")

    def check(pair):
        x, y = pair
        lhs = product(ctx, el_monomial(x), el_monomial(y))
        rhs = closed(x, y)
        if lhs != rhs:
            return (
                f"({format_monomial(A.labels, x)})({format_monomial(A.labels, y)})",
                closedform.product_diff(A.labels, rhs, lhs),
            )
        return None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, pairs))
    else:
        results = [check(p) for p in pairs]
    rep.checks = len(results)
    rep.failures = [Failure(w, d) for w, d in sorted(r for r in results if r is not None)]
    return rep


@app.post("/crosscheck", response_model=ReportModel)
def crosscheck(req: CrosscheckRequest) -> ReportModel:
    A = resolve_algebra(req)
    if A.name not in ("S", "T"):
        raise HTTPException(status_code=400, detail=f"no closed form for algebra {A.name!r}")
    return ReportModel.from_report(run_crosscheck(A, req.cap, req.jobs))


class QuotientTableRequest(AlgebraSource):
    cap: int = Field(default=2, ge=0)


class QuotientEntry(BaseModel):
    left: str
    right: str
    product: list[dict]
    pretty: str


@app.post("/quotient-table", response_model=list[QuotientEntry])
def quotient_table(req: QuotientTableRequest) -> list[QuotientEntry]:
    A = resolve_algebra(req)
    if A.name not in ("S", "T"):
        raise HTTPException(status_code=400, detail=f"no alternative quotient for algebra {A.name!r}")
    prod = _quotient_product_for(A)
    ideal = quotient.ideal_for(A.name)
    survivors = [m for m in monomials_up_to(A.dim, req.cap) if quotient.is_survivor(ideal, m)]
    out = []
    for x in survivors:
        for y in survivors:
            value = prod(x, y)
            out.append(
                QuotientEntry(
                    left=format_monomial(A.labels, x),
                    right=format_monomial(A.labels, y),
                    product=env_to_json(value),
                    pretty=format_env(A.labels, value),
                )
            )
    return out


class OctonionVerifyResponse(BaseModel):
    chain: ReportModel
    isomorphism_found: bool
    mapping: list[tuple[int, int]]


@app.post("/octonion-verify", response_model=OctonionVerifyResponse)
def octonion_verify() -> OctonionVerifyResponse:
    chain = octonion.verify_octonion_theorem_chain()
    mapping = octonion.find_signed_isomorphism(octonion.traceless_malcev(), catalog("M_nonsplit"))
    return OctonionVerifyResponse(
        chain=ReportModel.from_report(chain),
        isomorphism_found=mapping is not None,
        mapping=[(j, s) for j, s in mapping] if mapping else [],
    )


class IdentitiesRequest(BaseModel):
    decompose_g: bool = False
    order_seed: Optional[int] = None


class CoefficientEntry(BaseModel):
    element: str
    permutation: str
    coefficient: str


class DecompositionModel(BaseModel):
    member: bool
    span_dim: int
    recombined: bool
    coefficients: list[CoefficientEntry]


class IdentitiesResponse(BaseModel):
    bol_octonions: ReportModel
    bol_lts: ReportModel
    full_space_dim: int
    decomposition: Optional[DecompositionModel] = None


@app.post("/identities", response_model=IdentitiesResponse)
def identities(req: IdentitiesRequest) -> IdentitiesResponse:
    _, oct_rep = bol_from_right_alternative(catalog("octonions"))
    lts_rep = verify_bol(lts_bol_data())
    decomposition = None
    if req.decompose_g:
        rep = decompose_g(order_seed=req.order_seed)
        decomposition = DecompositionModel(
            member=rep.member,
            span_dim=rep.span_dim,
            recombined=rep.recombined,
            coefficients=[
                CoefficientEntry(element=name, permutation=perm, coefficient=str(coeff))
                for name, perm, coeff in rep.coefficients
            ],
        )
    from .identities import DIM

    return IdentitiesResponse(
        bol_octonions=ReportModel.from_report(oct_rep),
        bol_lts=ReportModel.from_report(lts_rep),
        full_space_dim=DIM,
        decomposition=decomposition,
    )


__all__ = [
    "app",
    "CATALOG_NAMES",
    "VARIETIES",
    "resolve_algebra",
    "run_crosscheck",
]

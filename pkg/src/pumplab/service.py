"""Stateless HTTP JSON API over the core library.

Every request is recomputed from its inputs; identical requests produce
byte-identical responses, and /api/strings pages by integer offset with no
server-side cursor. Errors use a fixed shape {code, message, position?} with
code one of syntax_error (422), resource_limit (429), bad_request (400).
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, ConfigDict, Field

from .automata import accepts, compile, determinize, export_graph
from .config import CliConfig
from .enumeration import enumerate_strings
from .errors import RegexSyntaxError, ResourceLimitError
from .pumping import (PumpSplit, min_pumping_length_exact,
                      min_pumping_length_sampled, pump)


class MembershipRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    regex: str
    input: str


class StringsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    regex: str
    count: int = Field(ge=1, le=10_000)
    offset: int = Field(ge=0)


class MplRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    regex: str
    mode: Literal["exact", "sampled"]
    max_len: int | None = Field(default=None, ge=1)


class PumpRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    regex: str
    x: str
    y: str = Field(min_length=1)
    z: str
    i: int = Field(ge=0)


def create_app(config: CliConfig | None = None) -> FastAPI:
    cfg = config or CliConfig()
    app = FastAPI(title="pumplab")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(RegexSyntaxError)
    async def _syntax_error(request, exc: RegexSyntaxError):
        return JSONResponse(status_code=422, content={
            "code": "syntax_error", "message": str(exc), "position": exc.position})

    @app.exception_handler(ResourceLimitError)
    async def _resource_limit(request, exc: ResourceLimitError):
        return JSONResponse(status_code=429, content={
            "code": "resource_limit", "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={
            "code": "bad_request", "message": str(exc)})

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/membership")
    def membership(req: MembershipRequest):
        nfa = compile(req.regex, cfg.reserved)
        return {"member": accepts(nfa, req.input)}

    @app.post("/api/strings")
    def strings(req: StringsRequest):
        nfa = compile(req.regex, cfg.reserved)
        batch = enumerate_strings(nfa, req.count, req.offset, cfg.frontier_cap)
        return {
            "strings": list(batch.strings),
            "epsilon_flags": [s == "" for s in batch.strings],
            "next_offset": batch.next_offset,
            "exhausted": batch.exhausted,
        }

    @app.post("/api/mpl")
    def mpl(req: MplRequest):
        nfa = compile(req.regex, cfg.reserved)
        if req.mode == "exact":
            result = min_pumping_length_exact(determinize(nfa, cfg.state_cap),
                                              cfg.state_cap)
        else:
            result = min_pumping_length_sampled(nfa, req.max_len or cfg.max_len,
                                                cfg.state_cap, cfg.frontier_cap)
        split = None
        if result.split is not None:
            split = {"x": result.split.x, "y": result.split.y, "z": result.split.z}
        return {
            "p": result.p,
            "witness": result.witness,
            "split": split,
            "mode": result.mode,
            "counterexample": result.counterexample_for_p_minus_1,
        }

    @app.post("/api/pump")
    def pump_endpoint(req: PumpRequest):
        nfa = compile(req.regex, cfg.reserved)
        pumped = pump(PumpSplit(req.x, req.y, req.z), req.i)
        return {"pumped": pumped, "member": accepts(nfa, pumped)}

    @app.get("/api/graph")
    def graph(regex: str):
        dot = export_graph(compile(regex, cfg.reserved), cfg.reserved)
        return PlainTextResponse(dot, media_type="text/vnd.graphviz")

    return app

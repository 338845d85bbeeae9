"""HTTP facade over the pipeline.

One request schema covers every mode; each endpoint fixes the mode and
returns the report as JSON, echoing the exit code the CLI would use so a
remote client behaves identically to a local run.
"""

from fastapi import FastAPI
from pydantic import BaseModel, Field

from . import pipeline

app = FastAPI(title="agref", version="0.1.0")


class SolveRequest(BaseModel):
  program: str = ""
  constants: dict[str, int] = Field(default_factory=dict)
  int_range: tuple[int, int] | None = None
  fn_depth: int = 0
  models_limit: int | None = None
  simplify: bool = True
  agg_budget: int = pipeline.DEFAULT_AGG_BUDGET
  search_budget: int = pipeline.DEFAULT_SEARCH_BUDGET
  list_inconsistent: bool = False

  def to_config(self, mode):
    return pipeline.RunConfig(
        program=self.program, constants=dict(self.constants), mode=mode,
        int_range=self.int_range, fn_depth=self.fn_depth,
        models_limit=self.models_limit, simplify=self.simplify,
        agg_budget=self.agg_budget, search_budget=self.search_budget,
        list_inconsistent=self.list_inconsistent)


class RunResponse(BaseModel):
  mode: str
  exit_code: int
  lines: list[str]
  models: list[list[str]] | None = None
  inconsistent: list[list[str]] | None = None


def _respond(report):
  return RunResponse(mode=report.mode, exit_code=report.exit_code,
                     lines=report.lines, models=report.models,
                     inconsistent=report.inconsistent)


@app.get("/health")
def health():
  return {"status": "ok"}


@app.post("/solve")
def solve(req: SolveRequest) -> RunResponse:
  return _respond(pipeline.run(req.to_config("models")))


@app.post("/ground")
def ground(req: SolveRequest) -> RunResponse:
  return _respond(pipeline.run(req.to_config("ground")))


@app.post("/core")
def core(req: SolveRequest) -> RunResponse:
  return _respond(pipeline.run(req.to_config("core")))


@app.post("/check")
def check(req: SolveRequest) -> RunResponse:
  return _respond(pipeline.run(req.to_config("check")))

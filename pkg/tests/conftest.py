"""Shared builders for the test suite.

Everything random is driven by explicit integer seeds so every test run
sees identical inputs.  Entry bounds are kept small (3) to keep exact
rational arithmetic fast without changing any verdict.
"""

from __future__ import annotations

import random

from killingtensor import (
    CurvatureTensor,
    MetricSignature,
    ModelKind,
    ModelSpace,
    benenti_rep,
    family_rep,
    metric_rep,
    random_curvature,
    random_invertible_matrix,
    random_symmetric_form,
)
from killingtensor._util import random_fraction

BOUND = 3


def sphere(p: int, q: int = 0) -> ModelSpace:
    return ModelSpace(ModelKind.SPHERE, MetricSignature(p, q))


def flat(p: int, q: int = 0) -> ModelSpace:
    return ModelSpace(ModelKind.FLAT, MetricSignature(p, q))


def nonzero_fraction(rng: random.Random, bound: int = BOUND):
    while True:
        value = random_fraction(rng, bound)
        if value != 0:
            return value


def random_family_member(model: ModelSpace, rng: random.Random) -> CurvatureTensor:
    """A generic member of the structured family lam2*h@h + lam1*h@g + lam0*g@g."""
    h = random_symmetric_form(model.dim, rng, bound=BOUND)
    return family_rep(
        h,
        nonzero_fraction(rng),
        nonzero_fraction(rng),
        nonzero_fraction(rng),
        signature=model.signature,
    )


def fixture_set(model: ModelSpace, seed: int) -> list[tuple[str, CurvatureTensor]]:
    """The standard cross-validation fixture set for one model space.

    One metric representative, ten Benenti representatives with random
    invertible endomorphisms, ten generic family members, and ten random
    curvature-class tensors.
    """
    rng = random.Random(seed)
    fixtures: list[tuple[str, CurvatureTensor]] = [("metric", metric_rep(model))]
    for k in range(10):
        A = random_invertible_matrix(model.dim, rng, bound=BOUND)
        fixtures.append((f"benenti-{k}", benenti_rep(model, A)))
    for k in range(10):
        fixtures.append((f"family-{k}", random_family_member(model, rng)))
    for k in range(10):
        fixtures.append((f"random-{k}", random_curvature(model.dim, rng, bound=BOUND)))
    return fixtures

"""Evaluate Killing tensors at rational points of the embedded models.

Three short experiments on the three-dimensional sphere:

 1. the metric representative evaluates to twice the induced metric on
    every tangent pair;
 2. the symmetrised covariant derivative of any symmetry-class tensor
    vanishes at every point — the Killing equation itself;
 3. a Benenti representative evaluates to twice the classical quartic
    polynomial  g(Ax,Ax) g(Av,Aw) - g(Ax,Av) g(Ax,Aw).

Run with:  python3 demos/killing_equation_pointwise.py
"""

from __future__ import annotations

import itertools
import random

from killingtensor import (
    MetricSignature,
    ModelKind,
    ModelSpace,
    Tensor,
    benenti_rep,
    killing_cov_deriv,
    killing_eval,
    metric_rep,
    r_to_s,
    random_curvature,
    random_invertible_matrix,
    random_tangent_vector,
    sample_point,
)


def matvec(A: Tensor, vec: Tensor) -> Tensor:
    return Tensor.from_nested(
        [sum(A[(c, a)] * vec[(a,)] for a in range(A.dim)) for c in range(A.dim)]
    )


def main() -> None:
    model = ModelSpace(ModelKind.SPHERE, MetricSignature(3, 0))
    rng = random.Random(4)
    point = sample_point(model, rng, bound=3)
    v = random_tangent_vector(point, rng, bound=3)
    w = random_tangent_vector(point, rng, bound=3)
    coords = [str(point.x[(i,)]) for i in range(3)]
    print(f"point x = ({', '.join(coords)}) on {model!r}\n")

    S_metric = r_to_s(metric_rep(model))
    value = killing_eval(S_metric, point, v, w)
    print(f"metric representative:  K(v, w) = {value} = 2 g(v, w) = {2 * model.pair(v, w)}")

    S_random = r_to_s(random_curvature(3, rng, bound=3))
    c = random_tangent_vector(point, rng, bound=3)
    symmetrised = sum(
        killing_cov_deriv(S_random, point, *triple)
        for triple in itertools.permutations((c, v, w))
    )
    print(f"random symmetry-class tensor:  symmetrised covariant derivative = {symmetrised}")

    A = random_invertible_matrix(3, rng, bound=3)
    S_benenti = r_to_s(benenti_rep(model, A))
    Ax, Av, Aw = (matvec(A, vec) for vec in (point.x, v, w))
    quartic = model.pair(Ax, Ax) * model.pair(Av, Aw) - model.pair(Ax, Av) * model.pair(Ax, Aw)
    print(f"Benenti representative:  K(v, w) = {killing_eval(S_benenti, point, v, w)}"
          f" = 2 * quartic polynomial = {2 * quartic}")


if __name__ == "__main__":
    main()

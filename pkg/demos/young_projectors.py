"""Tour of the symmetric-group machinery behind the curvature class.

Shows the square-tableau Young symmetriser and its defining algebra,
the hook-length dimensions for the partitions of four, two reference
Littlewood–Richardson products, and the projection of an arbitrary
order-4 tensor onto the curvature symmetry class.

Run with:  python3 demos/young_projectors.py
"""

from __future__ import annotations

from killingtensor import (
    Tensor,
    YoungFrame,
    lr_decompose,
    partitions,
    project_to_curvature,
    r_to_s,
    s_to_r,
    young_symmetriser,
)


def main() -> None:
    tau = young_symmetriser([[1, 2], [3, 4]])
    hook = YoungFrame((2, 2)).hook_product()
    print(f"square-tableau symmetriser: {tau.term_count()} terms, hook product {hook}")
    print(f"tau * tau == {hook} * tau : {tau.multiply(tau) == tau * hook}\n")

    print("partitions of 4 and their symmetric-group dimensions:")
    for frame in partitions(4):
        print(f"  {frame.rows!s:14} dim {frame.sym_irrep_dim()}")
    print()

    for rows1, rows2 in (((2,), (2,)), ((1, 1), (1, 1))):
        product = lr_decompose(YoungFrame(rows1), YoungFrame(rows2))
        frames = sorted(product, key=lambda frame: frame.rows, reverse=True)
        print(f"{rows1} x {rows2} = " + " + ".join(str(frame.rows) for frame in frames))
    print()

    # Project a one-hot order-4 tensor onto the curvature class.  The
    # image satisfies all three symmetries by construction, so wrapping
    # it validates, and the class conversions round-trip exactly.
    one_hot = Tensor.from_entries(3, 4, [((0, 1, 0, 2), 1)])
    R = project_to_curvature(one_hot)
    print(f"projected one-hot tensor: {R!r}")
    print(f"conversion round-trip is exact: {s_to_r(r_to_s(R)) == R}")


if __name__ == "__main__":
    main()

"""End-to-end run of the plectic identity suites on a committed scenario.

Loads the golden t=1 scenario, walks through the individual building blocks
(projectors, determinant map, invariant lift), then runs the full
verification report exactly as the `plectic verify` command would.
"""

from pathlib import Path

from plectic import plectic_ops as po
from plectic.runner import run
from plectic.scenario import load_scenario

scenario_path = Path(__file__).resolve().parent.parent / "scenarios" / "t1-split.kv"
sc = load_scenario(scenario_path)
print("scenario:", sc.name, " p =", sc.p, " r =", sc.r,
      " reduction sign =", sc.reduction_sign)

# the committed family of units and their minus-line coordinates
coords = po.minus_coordinates(sc.family, sc.units)
for i, coord in enumerate(coords):
    print("  Q_%d =" % (i + 1), coord)

# projectors annihilate each other factor-wise
sigma = po.make_sigma_point(sc.reduction_sign)
vecs = [(sc.points.complete(u).x, sc.points.complete(u).y)
        for u, _ in sc.family]
x = po.PlecticTensor.pure(coords[0], tuple(vecs))
plus = po.projector(x, "+", sc.reduction_sign, sigma)
print("\npr^- pr^+ kills the tensor:",
      po.projector(plus, "-", sc.reduction_sign, sigma).is_zero())

# determinant of the twisted point matrix
entries = [[(v[0].scale_int(sc.config.char_value(i, sc.config.tau[j])),
             v[1].scale_int(sc.config.char_value(i, sc.config.tau[j])))
            for j in range(sc.r)] for i, v in enumerate(vecs)]
w = po.det_map(entries)
print("determinant tensor:", w)

# the invariant committed in the scenario file round-trips through the lift
image = po.phi_minus(sc.invariant, sc.points, sc.config.shape)
back = po.lift_invariant(image, sc.points, sc.config.shape)
print("lift of the invariant agrees to",
      back.scalar_coeff(sc.config.shape).agreement(
          sc.invariant.scalar_coeff(sc.config.shape)), "digits")

# the full report, as `plectic verify scenarios/t1-split.kv` would print it
print("\nfull verification report:")
print(run(sc, floor=30).render_human())

"""Resolutions over F_2[G] for small groups, checked against the bar complex."""

from glcohom import grpcore
from glcohom.cohom import bar_oracle, build_resolution, cohomology_dims, exactness_profile

groups = {
    "C2": grpcore.cyclic(2),
    "C4": grpcore.cyclic(4),
    "V4": grpcore.elementary_abelian(4),
    "D8": grpcore.dihedral(8),
    "Q8": grpcore.quaternion8(),
    "C2^3": grpcore.elementary_abelian(8),
    "S3": grpcore.dihedral(6),
}

for name, gens in groups.items():
    t = grpcore.close_generators(gens, label=name)
    res = build_resolution(t, 4)
    dims = cohomology_dims(res)
    oracle = bar_oracle(t, 3)
    exact = all(k == i for k, i in exactness_profile(res))
    kind = "minimal" if res.minimal else "generic"
    print(f"{name:5} |G|={t.order:2}  ranks={res.ranks}  ({kind})  H^0..3={dims}  bar={oracle}  exact={exact}")

# for 2-groups dim H^1 is the Frattini rank
for name in ["D8", "Q8", "C2^3"]:
    t = grpcore.close_generators(groups[name])
    print(name, "Frattini rank", grpcore.frattini_rank(t))

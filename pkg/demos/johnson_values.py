"""Print tau for the standard generators and the image rank for small surfaces."""

from johnsonkit.johnson import tau_w
from johnsonkit.library import bounding_pair_std, disk_push, lantern_core_std, sep_twist, surjectivity_span
from johnsonkit.surface import model


def show(label, m):
    print(f"{label:<34} {tau_w(m)}")


show("separating twist, genus 2", sep_twist(model(2, [1]), 1))
show("bounding pair, blocks [1,2]", bounding_pair_std())
show("lantern core, blocks [4]", lantern_core_std())
show("disk push around x1, blocks [1,1]", disk_push(model(1, [1, 1]), "x1", 1))

print("\nrank of the image of tau")
for genus, blocks in [(3, [1]), (3, [1, 1]), (2, [2, 1, 1]), (0, [4]), (1, [2, 2])]:
    M = model(genus, blocks)
    print(f"  genus {genus} blocks {blocks}: span {surjectivity_span(M)}  expected {M.rank_w()}")

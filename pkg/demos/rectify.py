"""
Rectify the insertion grid of a biword one jeu de taquin step at a time, then
put every popped letter back with reversed jeu de taquin.

    python3 demos/rectify.py [BIWORD]
"""

import sys

from bpdrsk import PlacticBiword, insertion_grid, rect, reversed_jdt
from bpdrsk.jdt import rect_steps

q = PlacticBiword.parse(sys.argv[1] if len(sys.argv) > 1 else "1,3,1,2,1/3,3,2,2,1")
start = insertion_grid(q)
print("start perm", start.permutation())
print(start.shrink().ascii(), end="\n\n")

steps = rect_steps(start)
for step in steps:
    a, r = step.pop
    print(f"jdt pops column {a} from row {r}: perm {step.grid.permutation()}")

final, removed = rect(start)
print("I =", removed, " rect perm", final.permutation())

grid = final
for step in reversed(steps):
    a, r = step.pop
    grid = reversed_jdt(grid, r, a)
print("restored:", grid.shrink() == start.shrink())

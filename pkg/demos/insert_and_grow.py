"""
Insert a plactic biword letter by letter, then build its growth diagram both
ways and read off the compatible sequence and pipe dream.

    python3 demos/insert_and_grow.py [BIWORD]
"""

import sys

from bpdrsk import (
    PlacticBiword,
    compatible_sequence,
    growth_by_insertion,
    growth_by_rules,
    identity_grid,
    insert,
    pipe_dream,
)

q = PlacticBiword.parse(sys.argv[1] if len(sys.argv) > 1 else "1,3,1,2,1/3,3,2,2,1")

grid = identity_grid(1)
for b, k in q.letters:
    grid, path = insert(grid, b, k)
    print(f"insert ({b},{k}) -> perm {grid.permutation()}  pipes {path.pipes_through}")
    print(grid.shrink().ascii(), end="\n\n")

rules, direct = growth_by_rules(q), growth_by_insertion(q)
print(rules.render_ascii())
print("methods agree:", rules == direct)

cs = compatible_sequence(rules)
pd = pipe_dream(cs)
print(f"a = {list(cs.a_seq)}  r = {list(cs.r_seq)}")
print(pd.ascii())
print("pipe dream perm", pd.permutation(), "reduced:", pd.is_reduced())

"""
Machine and network agree, in linear time
=========================================

Run every word up to length 6 through both the machine and its compiled
network, then compare the network's step counts with the machine's
accepting depth.
"""

import numpy as np

from nusp import compile_machine
from nusp.machines import SAMPLES
from nusp.oracles import equivalence_check

for name, make in SAMPLES.items():
    M = make()
    cn = compile_machine(M)
    report = equivalence_check(M, cn, 6)
    print(report.render())
    pts = np.array(report.accepted_points())
    if len(pts):
        # steps per simulated move, beyond the bootstrap
        per_move = (pts[:, 1] - cn.overhead[1]) / np.maximum(pts[:, 0], 1)
        print(f"  steps per move: min {per_move.min():.1f}, mean {per_move.mean():.1f}, max {per_move.max():.1f}")
    print()

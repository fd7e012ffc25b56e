from specfac.canonical import canonical_form
from specfac.enumeration import CONNECTED_COUNTS, brute_force_connected, connected_classes
from specfac.graph import random_connected_graph
import numpy as np
import time


n_trials = 100
n_canonical = 14
max_n = 8


""" CANONICAL FORM """
rng = np.random.default_rng(1)
graphs = [random_connected_graph(n_canonical, 0.4, rng) for _ in range(n_trials)]
start_time = time.perf_counter()
for G in graphs:
    canonical_form(G)
proc_time = time.perf_counter() - start_time
print(f"Canonical form (n={n_canonical}) : {proc_time / n_trials * 1000} ms")


""" BRUTE FORCE VS AUGMENTATION """
start_time = time.perf_counter()
brute = brute_force_connected(6)
proc_time = time.perf_counter() - start_time
print(f"Brute force n=6, {len(brute)} classes : {proc_time * 1000} ms")

for n in range(1, max_n + 1):
    start_time = time.perf_counter()
    classes = connected_classes(n)
    proc_time = time.perf_counter() - start_time
    assert len(classes) == CONNECTED_COUNTS[n]
    print(f"n={n}, {len(classes)} classes : {proc_time * 1000} ms")

from specfac.factor import has_factor_criterion, has_factor_independent, find_factor
from specfac.graph import construct_family, random_connected_graph
import numpy as np
import time


n_trials = 20
n = 20
p = 0.3
seed = 0


rng = np.random.default_rng(seed)
graphs = [random_connected_graph(n, p, rng) for _ in range(n_trials)]
graphs += [construct_family(1, n - 3, 2), construct_family(2, n - 6, 4)]


""" SUBSETS """
start_time = time.perf_counter()
by_subsets = [has_factor_criterion(G, "subsets") for G in graphs]
proc_time = time.perf_counter() - start_time
print(f"Subsets : {proc_time / len(graphs) * 1000} ms")

""" NEIGHBORHOOD """
start_time = time.perf_counter()
by_neighborhood = [has_factor_criterion(G, "neighborhood") for G in graphs]
proc_time = time.perf_counter() - start_time
print(f"Neighborhood : {proc_time / len(graphs) * 1000} ms")
assert by_subsets == by_neighborhood

""" INDEPENDENT SETS """
start_time = time.perf_counter()
by_independent = [has_factor_independent(G) for G in graphs]
proc_time = time.perf_counter() - start_time
print(f"Independent sets : {proc_time / len(graphs) * 1000} ms")
assert by_independent == [has for has, _ in by_subsets]


""" DECOMPOSITION SEARCH """
small = [random_connected_graph(12, p, rng) for _ in range(n_trials)]
start_time = time.perf_counter()
certs = [find_factor(G) for G in small]
proc_time = time.perf_counter() - start_time
print(f"Decomposition search (n=12) : {proc_time / len(small) * 1000} ms")
print(f"{sum(c is not None for c in certs)} of {len(small)} with a factor")

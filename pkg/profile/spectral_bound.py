from specfac import polynomials as poly
from specfac.graph import construct_family
from specfac.spectral import alpha_matrix, spectral_radius
from specfac.verify import verify_theorem2
import time


n_trials = 1000
n = 25
alpha = 0.5
trials = 2000
jobs = -1


""" CLOSED FORM VS DENSE EIGENSOLVE """
start_time = time.perf_counter()
for _ in range(n_trials):
    t = poly.tau(n, alpha)
proc_time = time.perf_counter() - start_time
print(f"tau closed form : {proc_time / n_trials * 1000} ms")

G2 = construct_family(1, n - 3, 2)
start_time = time.perf_counter()
for _ in range(n_trials):
    rho = spectral_radius(alpha_matrix(G2, alpha))
proc_time = time.perf_counter() - start_time
print(f"Dense eigensolve : {proc_time / n_trials * 1000} ms")
print(f"|tau - rho| = {abs(t - rho)}")


""" SAMPLED HARNESS """
start_time = time.perf_counter()
report = verify_theorem2(alpha, n_list=[n], trials=trials, jobs=jobs)
proc_time = time.perf_counter() - start_time
print(f"theorem2 harness ({trials} samples) : {proc_time} s")
print(report.summary()["notes"])
assert report.ok

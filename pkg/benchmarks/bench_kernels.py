"""Benchmark the compiled kernel backend against the numpy fallback.

Times the three hot kernels on the matrix sizes the sampling verifier
actually hits (dims 2..8, ~1000 states per batch), then the verifier
end to end under each backend.

Usage: python benchmarks/bench_kernels.py [--states N] [--families M]
"""

import argparse
import time

import numpy as np

from mvql import _backend
from mvql.propfunctions import verify_conditions


def best_of(fn, repeats=7, inner=20):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(inner):
            fn()
        best = min(best, (time.perf_counter() - start) / inner)
    return best


def random_inputs(dim, n_states, seed=0):
    rng = np.random.default_rng(seed)
    gauss = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    matrix = (gauss + gauss.conj().T) / 2
    states = rng.standard_normal((n_states, dim)) + 1j * rng.standard_normal((n_states, dim))
    states /= np.linalg.norm(states, axis=1, keepdims=True)
    vectors = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return matrix, states, vectors


def format_row(label, timings):
    python_us = timings["python"] * 1e6
    cells = [f"{label:<28}", f"{python_us:>10.1f}"]
    if "compiled" in timings:
        compiled_us = timings["compiled"] * 1e6
        cells.append(f"{compiled_us:>10.1f}")
        cells.append(f"{timings['python'] / timings['compiled']:>8.1f}x")
    return "  ".join(cells)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--states", type=int, default=1000)
    parser.add_argument("--families", type=int, default=200)
    args = parser.parse_args()

    backends = _backend.available_backends()
    names = list(backends)
    print(f"available backends: {', '.join(names)}")
    header = f"{'workload':<28}  {'python/us':>10}"
    if "compiled" in backends:
        header += f"  {'compiled/us':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for dim in (2, 4, 8):
        matrix, states, vectors = random_inputs(dim, args.states)
        rows = {
            f"quad_forms dim={dim} n={args.states}": lambda k: k.quad_forms(matrix, states),
            f"mgs_orthonormalize dim={dim}": lambda k: k.mgs_orthonormalize(vectors, 1e-9),
            f"idempotency_defect dim={dim}": lambda k: k.idempotency_defect(matrix),
        }
        for label, call in rows.items():
            timings = {
                name: best_of(lambda k=kernels: call(k)) for name, kernels in backends.items()
            }
            print(format_row(label, timings))

    print()
    print(f"verify_conditions(dim=8, states={args.states}, families={args.families}, seed=1):")
    original = _backend.BACKEND
    try:
        for name in names:
            _backend.set_backend(name)
            start = time.perf_counter()
            report = verify_conditions(8, args.states, args.families, seed=1)
            elapsed = time.perf_counter() - start
            status = "pass" if report.all_passed else "FAIL"
            print(f"  backend {name:<9} {elapsed * 1e3:8.1f} ms  ({status}, "
                  f"worst residual {report.worst_residual:.2e})")
    finally:
        _backend.set_backend(original)


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python Jacobi eigensolvers.

    python3 benchmarks/bench_jacobi.py [--repeat N]

Times ``hermitian_eig`` on random 4x4 and 8x8 Hermitian matrices and
``concurrence_numeric`` on a random two-qubit density matrix, for every
available backend, and reports the largest eigenvalue disagreement.
"""

import argparse
import timeit

import numpy as np

from relspin import linalg
from relspin.entanglement import concurrence_numeric


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def random_density(rng):
    a = random_hermitian(rng, 4)
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=2000)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    cases = {
        "eig 4x4": (linalg.hermitian_eig, random_hermitian(rng, 4)),
        "eig 8x8": (linalg.hermitian_eig, random_hermitian(rng, 8)),
        "concurrence": (concurrence_numeric, random_density(rng)),
    }
    backends = linalg.available_backends()
    previous = linalg.BACKEND
    timings, eigs = {}, {}
    try:
        for name in backends:
            linalg.set_backend(name)
            eigs[name] = linalg.hermitian_eig(cases["eig 8x8"][1])[0]
            for case, (fn, arg) in cases.items():
                t = timeit.timeit(lambda: fn(arg), number=args.repeat)
                timings[name, case] = t / args.repeat * 1e6
    finally:
        linalg.set_backend(previous)

    print(f"{'case':<14}" + "".join(f"{b + ' (us)':>16}" for b in backends) + f"{'speedup':>10}")
    for case in cases:
        row = [timings[b, case] for b in backends]
        speedup = f"{row[-1] / row[0]:10.1f}" if len(row) > 1 else ""
        print(f"{case:<14}" + "".join(f"{t:16.1f}" for t in row) + speedup)
    if len(backends) > 1:
        diff = np.abs(eigs[backends[0]] - eigs[backends[1]]).max()
        print(f"max eigenvalue difference between backends: {diff:.2e}")


if __name__ == "__main__":
    main()

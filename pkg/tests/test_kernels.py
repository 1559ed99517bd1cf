import os
from pathlib import Path
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from paragroup import _kernels
from paragroup._kernels import numba_impl, numpy_impl, python_loops_impl

IMPLS = [numba_impl, numpy_impl, python_loops_impl]
needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")

tables = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                       min_size=n, max_size=n)).map(lambda t: np.array(t, dtype=np.int64))


@settings(max_examples=300, deadline=None)
@given(tables)
def test_associativity_agrees(table):
    expected = oracles.associativity_failure(table) or (-1, -1, -1)
    for impl in IMPLS:
        assert tuple(int(v) for v in impl.associativity_failure(table)) == expected


@settings(max_examples=300, deadline=None)
@given(tables)
def test_proper_ideal_agrees(table):
    # the ideal kernel assumes an associative table only for its meaning, not its mechanics
    n = len(table)
    expected = next((a for a in range(n) if len(oracles.ideal(table, a)) < n), -1)
    for impl in IMPLS:
        assert int(impl.first_proper_ideal(table)) == expected


@settings(max_examples=200, deadline=None)
@given(tables, st.randoms(use_true_random=False))
def test_homomorphism_agrees(table, rnd):
    n = len(table)
    phi = np.array(rnd.sample(range(n), n), dtype=np.int64)
    inv = np.argsort(phi)
    # transport the table along phi: dst[phi i, phi j] = phi[src[i, j]]
    dst = phi[table[np.ix_(inv, inv)]]
    for impl in IMPLS:
        assert tuple(impl.homomorphism_failure(table, dst, phi)) == (-1, -1)
    if n > 1:
        bad = phi.copy()
        bad[[0, 1]] = bad[[1, 0]]
        results = {tuple(int(v) for v in impl.homomorphism_failure(table, dst, bad)) for impl in IMPLS}
        assert len(results) == 1


def test_bicyclic_chain_agrees():
    lower = np.arange(10_000, dtype=np.int64)
    outs = [np.asarray(impl.bicyclic_chain(lower)) for impl in (numba_impl, numpy_impl)]
    assert outs[0].all() and np.array_equal(outs[0], outs[1])


@needs_numba
def test_numba_is_default():
    assert _kernels.USE_NUMBA == (os.environ.get("PARAGROUP_DISABLE_JIT", "") in ("", "0"))


@pytest.mark.parametrize("flag,expected", [("1", "numpy"), ("0", "numba" if _kernels.HAVE_NUMBA else "numpy")])
def test_env_flag_selects_path(flag, expected):
    code = ("from paragroup import _kernels as k; "
            "print('numba' if k.active is k.numba_impl else 'numpy')")
    env = dict(os.environ, PARAGROUP_DISABLE_JIT=flag)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == expected


def test_benchmark_script_runs():
    script = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--orders", "16", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "associativity" in out.stdout and "bicyclic_chain" in out.stdout

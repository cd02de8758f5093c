import json
import os
import subprocess
import sys
from itertools import permutations

import numpy as np
import pytest

from hurwitzkp import _kernels as K
from hurwitzkp._accel import HAVE_NUMBA, backend


@pytest.fixture(scope="module")
def perms():
    return np.array(list(permutations(range(6))), dtype=np.int64)


def test_rank_is_lex_position(perms):
    assert np.array_equal(K.rank_numpy(perms), np.arange(len(perms)))
    assert np.array_equal(K.rank_numba(perms), np.arange(len(perms)))


def test_cycle_multiplicities_parity(perms):
    a = K.cycle_multiplicities_numpy(perms)
    b = K.cycle_multiplicities_numba(perms)
    assert np.array_equal(a, b)
    # every permutation's cycle lengths add up to n
    assert np.all((a * np.arange(a.shape[1])).sum(axis=1) == perms.shape[1])


def test_gather_sum_parity(perms):
    rng = np.random.default_rng(7)
    vec = rng.integers(-9, 10, size=len(perms))
    tables = rng.integers(0, len(perms), size=(5, len(perms)))
    assert np.array_equal(K.gather_sum_numpy(vec, tables), K.gather_sum_numba(vec, tables))


def test_pair_counts_parity():
    rng = np.random.default_rng(3)
    left, right = rng.integers(0, 6, size=200), rng.integers(0, 6, size=200)
    a = K.pair_counts_numpy(left, right, 6)
    assert np.array_equal(a, K.pair_counts_numba(left, right, 6))
    assert a.sum() == 200


def test_backend_flag():
    assert backend() == ("numba" if HAVE_NUMBA else "numpy")


SNIPPET = """
import json
from hurwitzkp._accel import backend
from hurwitzkp.group_oracle import jucys_symmetric
print(json.dumps({"backend": backend(), "h3": jucys_symmetric(6, "h", 3).to_json(), "p2": jucys_symmetric(5, "p", 2).to_json()}))
"""


def _run(env_flag):
    env = dict(os.environ)
    env.pop("HURWITZKP_NO_NUMBA", None)
    if env_flag:
        env["HURWITZKP_NO_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", SNIPPET], capture_output=True, text=True, env=env, check=True)
    return json.loads(out.stdout)


def test_numpy_fallback_gives_identical_results():
    fallback = _run(True)
    assert fallback["backend"] == "numpy"
    default = _run(False)
    assert default["h3"] == fallback["h3"]
    assert default["p2"] == fallback["p2"]

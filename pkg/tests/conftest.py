import numpy as np
import pytest

from lagschottky import schottky as sk


def random_reduced_word(rng, length, g=2):
    letters = []
    while len(letters) < length:
        cand = (int(rng.integers(0, g)), int(rng.choice([-1, 1])))
        if letters and cand == sk.letter_inverse(letters[-1]):
            continue
        letters.append(cand)
    return sk.ReducedWord(tuple(letters))


@pytest.fixture(scope="session")
def sp4_data():
    data = sk.sp4_schottky_example()
    # warm the caches shared by the whole session
    sk.contraction_constant(data)
    sk.second_order_diameter(data)
    return data


@pytest.fixture(scope="session")
def classical_data():
    """Strongly separated n=1 system used by the classical-oracle checks."""
    mats, model = sk.classical_schottky_example(g=2, lam=8.0, halfwidth=0.05)
    data = sk.embed_diagonal_sl2(mats, model, 1)
    data._cache["mats2x2"] = mats
    return data


@pytest.fixture(scope="session")
def sp4_fd(sp4_data):
    from lagschottky import domains
    return domains.fundamental_domain(sp4_data)

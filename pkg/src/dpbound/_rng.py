"""Seeded, stream-splittable random generators."""

import os

import numpy as np

DEFAULT_SEED = 20200907


def default_seed():
    """Seed from ``DPBOUND_SEED`` if set, else the package default."""
    env = os.environ.get("DPBOUND_SEED")
    if env is None or env.strip() == "":
        return DEFAULT_SEED
    return int(env)


def stream_generators(seed, n_streams, offset=0):
    """Independent generators for streams ``offset .. offset+n_streams-1``.

    Stream ``k`` always gets the same generator for a given seed, regardless
    of how many streams are requested in total.
    """
    root = np.random.SeedSequence(seed)
    children = root.spawn(offset + n_streams)[offset:]
    return [np.random.Generator(np.random.PCG64(c)) for c in children]


def split_counts(total, parts):
    base, extra = divmod(int(total), int(parts))
    return [base + (1 if k < extra else 0) for k in range(parts)]

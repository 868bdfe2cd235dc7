import hashlib

import numpy as np


def _stage_key(stage: tuple[str | int, ...]) -> int:
    name = ":".join(str(part) for part in stage)
    digest = hashlib.blake2b(name.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def derive_seed(seed: int, *stage: str | int) -> int:
    """Integer seed for one named stage of a run.

    The stage name is hashed into the spawn key of a ``SeedSequence`` rooted at
    ``seed``, so each stage draws from its own stream and adding a stage leaves
    the others untouched.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(_stage_key(stage),))
    return int(sequence.generate_state(1, dtype=np.uint32)[0])


def stage_rng(seed: int, *stage: str | int) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *stage))

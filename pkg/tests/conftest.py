import random

import pytest

from dnamagic.imageio import PlainImage
from dnamagic.reference import NucleotideSequence, build_key

KEY_SEED = 20240811


def random_bases(rng: random.Random, length: int) -> str:
    return "".join(rng.choices("ACGT", k=length))


def random_image(rng: random.Random, width: int, height: int | None = None) -> PlainImage:
    height = width if height is None else height
    return PlainImage(width, height, rng.randbytes(width * height))


@pytest.fixture(scope="session")
def random_key():
    """One uniformly random 65540-base key shared across the suite."""
    rng = random.Random(KEY_SEED)
    return build_key(NucleotideSequence(random_bases(rng, 65540), source_name="test-key"))

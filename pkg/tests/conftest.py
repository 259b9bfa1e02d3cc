import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SAMPLE = b"baababaabaabab"
SAMPLE_TEXT = SAMPLE + b"\x00"


@pytest.fixture
def sample():
    return SAMPLE


def random_text(rng: random.Random, n: int, sigma: int) -> bytes:
    """Uniform over ``sigma`` letters from 'a', or repetitive with edits."""
    alphabet = bytes(range(ord("a"), ord("a") + sigma))
    if n == 0:
        return b""
    if rng.random() < 0.34:
        block = bytes(rng.choice(alphabet) for _ in range(rng.randint(1, 12)))
        out = bytearray((block * (n // len(block) + 1))[:n])
        for _ in range(rng.randint(0, 3)):
            out[rng.randrange(n)] = rng.choice(alphabet)
        return bytes(out)
    return bytes(rng.choice(alphabet) for _ in range(n))


def random_patterns(rng: random.Random, text: bytes, sigma: int, count: int) -> list:
    """Half random strings, half substrings; lengths 0..8."""
    alphabet = bytes(range(ord("a"), ord("a") + sigma))
    out = []
    for t in range(count):
        m = rng.randint(0, 8)
        if t % 2 == 0 or len(text) < m or not text:
            out.append(bytes(rng.choice(alphabet) for _ in range(m)))
        else:
            s = rng.randint(0, len(text) - m)
            out.append(text[s:s + m])
    return out

"""Encryption and decryption pipelines plus the DMC1 ciphertext container.

Encrypt: pixels -> four-base words -> key positions -> magic-square scramble.
Decrypt runs the exact inverse and is a pure function of (container, key).
Ciphertext keeps the plaintext's spatial dimensions; each cell widens from
8 to 16 bits so pointers into the key window stay unambiguous.

Container layout (all integers little-endian):

    bytes 0-3   magic "DMC1"
    byte  4     format version, currently 1
    byte  5     flags (bit 0: fingerprint present)
    bytes 6-9   width, 32-bit
    bytes 10-13 height, 32-bit
    [bytes 14-21 key fingerprint, 64-bit, only when flag bit 0 is set]
    then width*height cells, 16-bit each, row-major, already scrambled
"""

import struct
from dataclasses import dataclass
from functools import lru_cache

from .dna import resynthesize, synthesize
from .errors import BadMagic, DimensionError, TruncatedPayload, UnsupportedVersion, WrongKey
from .imageio import PlainImage
from .magic_square import Permutation, generate_doubly_even, scramble, to_permutation, unscramble
from .reference import ReferenceKey
from .substitution import PointerGrid, RandomStream, reverse_substitute, substitute

CONTAINER_MAGIC = b"DMC1"
CONTAINER_VERSION = 1
FLAG_FINGERPRINT = 0x01
_HEADER = struct.Struct("<4sBBII")


@dataclass(frozen=True)
class CipherImage:
    """Scrambled pointer grid with container metadata."""

    width: int
    height: int
    pointers: tuple[int, ...]
    flags: int = 0
    fingerprint: int | None = None

    def __post_init__(self):
        if len(self.pointers) != self.width * self.height:
            raise ValueError(
                f"cell count {len(self.pointers)} does not match {self.width}x{self.height}"
            )


def _check_dimensions(width: int, height: int) -> None:
    if width != height or width < 4 or width % 4 != 0:
        raise DimensionError(width, height)


@lru_cache(maxsize=16)
def _permutation_for(order: int) -> Permutation:
    # the square is public structure regenerated from the side length,
    # never stored in the container and never key material
    return to_permutation(generate_doubly_even(order))


def encrypt(image: PlainImage, key: ReferenceKey, rng: RandomStream,
            include_fingerprint: bool = False) -> CipherImage:
    """Encrypt a square image whose side is a multiple of 4."""
    _check_dimensions(image.width, image.height)
    grid = substitute(synthesize(image), key, rng)
    perm = _permutation_for(image.width)
    scrambled = tuple(scramble(grid.pointers, perm))
    if include_fingerprint:
        return CipherImage(image.width, image.height, scrambled, FLAG_FINGERPRINT, key.fingerprint)
    return CipherImage(image.width, image.height, scrambled)


def decrypt(cipher: CipherImage, key: ReferenceKey) -> PlainImage:
    """Invert encrypt; raises WrongKey when an embedded fingerprint disagrees."""
    # dimensions are validated before any permutation is built, so a malformed
    # header can never drive an out-of-bounds rearrangement
    _check_dimensions(cipher.width, cipher.height)
    if cipher.flags & FLAG_FINGERPRINT and cipher.fingerprint != key.fingerprint:
        raise WrongKey(cipher.fingerprint or 0, key.fingerprint)
    perm = _permutation_for(cipher.width)
    grid = PointerGrid(cipher.width, cipher.height, tuple(unscramble(cipher.pointers, perm)))
    return resynthesize(reverse_substitute(grid, key))


def serialize(cipher: CipherImage) -> bytes:
    """Emit the container bytes; deterministic byte-for-byte."""
    if bool(cipher.flags & FLAG_FINGERPRINT) != (cipher.fingerprint is not None):
        raise ValueError("fingerprint flag and fingerprint field disagree")
    parts = [_HEADER.pack(CONTAINER_MAGIC, CONTAINER_VERSION, cipher.flags,
                          cipher.width, cipher.height)]
    if cipher.fingerprint is not None:
        parts.append(struct.pack("<Q", cipher.fingerprint))
    parts.append(struct.pack(f"<{len(cipher.pointers)}H", *cipher.pointers))
    return b"".join(parts)


def deserialize(data: bytes) -> CipherImage:
    """Exact inverse of serialize; bytes past the payload are ignored."""
    if len(data) < _HEADER.size:
        raise TruncatedPayload(_HEADER.size, len(data))
    magic, version, flags, width, height = _HEADER.unpack_from(data, 0)
    if magic != CONTAINER_MAGIC:
        raise BadMagic(magic)
    if version != CONTAINER_VERSION:
        raise UnsupportedVersion(version)
    _check_dimensions(width, height)
    pos = _HEADER.size
    fingerprint = None
    if flags & FLAG_FINGERPRINT:
        if len(data) < pos + 8:
            raise TruncatedPayload(pos + 8, len(data))
        (fingerprint,) = struct.unpack_from("<Q", data, pos)
        pos += 8
    count = width * height
    if len(data) < pos + 2 * count:
        raise TruncatedPayload(pos + 2 * count, len(data))
    pointers = struct.unpack_from(f"<{count}H", data, pos)
    return CipherImage(width, height, pointers, flags, fingerprint)

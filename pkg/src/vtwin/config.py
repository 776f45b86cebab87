"""Run-wide limits and defaults."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    # largest strand count accepted by word constructors
    max_n: int = 8
    # graph automorphism enumeration is factorial in n
    max_aut_n: int = 6
    seed: int = 0x5EED
    samples: int = 200
    max_word_length: int = 24


DEFAULT = Config()

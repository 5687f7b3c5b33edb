"""Discrete-time quantum walks driven by constant, quasiperiodic and random coin sequences."""

from ._qwalk import (
    Coin,
    DomainError,
    Error,
    FitDomainError,
    LetterStream,
    ResourceError,
    SequenceSpec,
    ValidationError,
    __version__,
    default_window,
    detect_period,
    ensemble_average,
    evolve,
    fibonacci_word,
    fit_exponent,
    silver_word,
    spin_products,
    sweep,
)

__all__ = [
    "Coin",
    "DomainError",
    "Error",
    "FitDomainError",
    "LetterStream",
    "ResourceError",
    "SequenceSpec",
    "ValidationError",
    "__version__",
    "default_window",
    "detect_period",
    "ensemble_average",
    "evolve",
    "fibonacci_word",
    "fit_exponent",
    "silver_word",
    "spin_products",
    "sweep",
]

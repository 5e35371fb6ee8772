"""Run engine computations, doubling the jet precision when it runs out."""

import os

from .errors import PrecisionExhausted

DEFAULT_RETRIES = 4
ENV_PRECISION = "LIMITRAM_PRECISION"


def env_precision():
    value = os.environ.get(ENV_PRECISION)
    if value is None or not value.strip():
        return None
    try:
        n = int(value)
    except ValueError:
        raise ValueError(f"{ENV_PRECISION} must be an integer, got {value!r}") from None
    if n < 8:
        raise ValueError(f"{ENV_PRECISION} must be at least 8")
    return n


def with_retries(fn, model, retries=DEFAULT_RETRIES):
    """``fn(model)`` retried at doubled precision; returns (result, model used).

    Exact results do not depend on the precision once it suffices, so a
    retry can only turn a failure into a success.
    """
    attempt = model
    for _ in range(retries):
        try:
            return fn(attempt), attempt
        except PrecisionExhausted:
            attempt = attempt.with_precision(2 * attempt.precision)
    return fn(attempt), attempt

"""Exception types shared across the package."""


class SelfCheckError(RuntimeError):
    """A built-in numeric cross-check failed beyond the configured tolerance.

    Raised by operations that verify their own output against an independent
    route (e.g. an analytic series against direct evolution). The CLI maps
    this to exit code 3.
    """


class ConfigError(ValueError):
    """A scenario configuration is malformed or semantically invalid.

    The message names the offending field. The CLI maps this to exit code 2.
    """

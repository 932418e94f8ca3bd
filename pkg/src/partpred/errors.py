"""Exception hierarchy shared across the pipeline.

Class names mirror the failure they signal; the CLI maps each branch of the
hierarchy to a distinct exit code.
"""


class PartpredError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(PartpredError):
    """A configuration value violates its invariant."""


# --- corpus ---------------------------------------------------------------


class ParseError(PartpredError):
    """A data file is malformed. Carries the offending line number."""

    def __init__(self, path: str, line_no: int, message: str) -> None:
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class IntegrityError(PartpredError):
    """Referential integrity of loaded data is broken."""


class NoKnownTokens(PartpredError):
    """Every token of an event is out of vocabulary (or there are none)."""


# --- joint graph ----------------------------------------------------------


class DomainError(PartpredError):
    """Mutual-information counts violate their preconditions."""


class EmptyCorpus(PartpredError):
    """An operation requires a non-empty corpus."""


# --- embeddings and models ------------------------------------------------


class DimensionMismatch(PartpredError):
    """Vector or matrix dimensions do not line up."""


class EmptyGraph(PartpredError):
    """Graph embedding training requires at least one triple."""


class NoCandidates(PartpredError):
    """No replacement entity is available for triple corruption."""


class SingularSystem(PartpredError):
    """The unregularized mapping system is rank-deficient."""


class MissingGraphEmbedding(PartpredError):
    """A user has no graph embedding where one is required."""


class InsufficientNeighbors(PartpredError):
    """Fewer donor users than the requested neighborhood size."""


class InsufficientUsers(PartpredError):
    """An event's non-participant pool is smaller than the sampling ratio."""


class UnresolvableEmbedding(PartpredError):
    """A training or eval pair cannot be resolved to input embeddings."""


class LengthMismatch(PartpredError):
    """Paired prediction lists have different lengths."""


class EmptyDataset(PartpredError):
    """A training phase received no pairs."""


# --- evaluation -----------------------------------------------------------


class EmptyPositives(PartpredError):
    """A ranking metric needs at least one positive."""


class OverlapError(PartpredError):
    """Held-out cold events overlap the training events."""


class PoolTooSmall(PartpredError):
    """The user pool cannot fill the candidate list."""


class PositivesExceedN(PartpredError):
    """An event has at least as many positives as candidate slots."""

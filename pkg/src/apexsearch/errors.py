"""Exception hierarchy shared across the package."""


class ApexError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(ApexError):
    """An argument violates an operation's precondition."""


class EmptyPlanError(ApexError):
    """The planner produced no usable sub-questions."""


class PlanTooLongError(ApexError):
    """The plan exceeds the configured sub-question cap."""


class InvalidReferenceError(ApexError):
    """A sub-question references itself or a later sub-question."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class UnresolvedReferenceError(ApexError):
    """A back-reference points at a missing or empty answer."""

    def __init__(self, message, ref=None):
        super().__init__(message)
        self.ref = ref


class DegenerateVectorError(ApexError):
    """A zero-norm vector was given where a direction is required."""


class EmbeddingBackendError(ApexError):
    """The embedding endpoint failed after all retries."""


class CorpusError(ApexError):
    """Corpus ingestion failed (malformed line, duplicate id, bad file)."""


class IndexFormatError(ApexError):
    """A persisted index file is corrupt or has the wrong format."""


class ReplayGapError(ApexError):
    """A scripted backend has no fixture entry for a request."""

    def __init__(self, capability, digest):
        super().__init__(f"no fixture entry for {capability}:{digest}")
        self.capability = capability
        self.digest = digest


class BackendUnavailableError(ApexError):
    """The generation endpoint failed after all retries."""


class ResponseParseError(ApexError):
    """A model response did not match its capability's output contract."""

    def __init__(self, message, raw=None):
        super().__init__(message)
        self.raw = raw


class PipelineRunError(ApexError):
    """A run aborted mid-flight; carries the partial trace for persistence."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class DatasetError(ApexError):
    """A benchmark dataset file is malformed."""


class ConfigError(ApexError):
    """Configuration resolution failed; names the offending key."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key

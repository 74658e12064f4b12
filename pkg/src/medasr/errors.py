"""Exception types shared across the toolkit."""


class MedasrError(Exception):
    """Base class for all toolkit errors."""


class EmptyReference(MedasrError):
    """Reference has zero scoring units; WER/CER is undefined."""


class EmptyCorpus(MedasrError):
    """An aggregation or evaluation received no usable samples."""


class InvalidRate(MedasrError):
    """A sample rate argument is not a positive number."""


class WrongSampleRate(MedasrError):
    """Audio is not at the sample rate an operation requires."""


class MalformedAudio(MedasrError):
    """An audio file could not be parsed as 16-bit mono PCM WAV."""


class EmptySource(MedasrError):
    """Source ingestion produced zero usable records."""


class SchemaError(MedasrError):
    """A structured file or wire payload is missing or mistypes a field."""


class MismatchedCorpora(MedasrError):
    """Two reports cover different benchmarks or entry id sets."""


class BackendError(MedasrError):
    """A model backend failed; carries the HTTP status when one exists."""

    def __init__(self, message, status=None):
        super().__init__(message)
        self.status = status


class BackendTimeout(MedasrError):
    """A backend did not answer within the configured timeout budget."""

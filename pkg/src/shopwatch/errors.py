"""Exception types shared across the pipeline."""


class ShopwatchError(Exception):
    """Base class for all package errors."""


# --- feature extraction ---

class WrongPointCount(ShopwatchError):
    """A landmark frame does not carry exactly 68 points."""


class NonPositiveBboxDimension(ShopwatchError):
    """Face bounding box width or height is zero or negative."""


class ParseError(ShopwatchError):
    """A text record is not syntactically valid."""

    def __init__(self, message: str, field: str = ""):
        super().__init__(message)
        self.field = field


class ValidationError(ShopwatchError):
    """A record parsed but violates an invariant; `field` names the offender."""

    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field


# --- learners ---

class EmptyModel(ShopwatchError):
    """Prediction requested from a model with no classes or no examples."""


class EmptyDataset(ShopwatchError):
    """Training requested on an empty dataset."""


class InsufficientReference(ShopwatchError):
    """Anomaly reference corpus too small for the configured neighbor count."""


class BadFoldCount(ShopwatchError):
    """Cross-validation fold count outside 2..n."""


class MismatchedReports(ShopwatchError):
    """Accuracy reports being compared were not computed on the same setup."""


class CorruptModel(ShopwatchError):
    """Serialized model bytes are structurally invalid."""


# --- protocol / services ---

class DecodeError(ShopwatchError):
    """A wire message failed to decode; carries byte offset and field name."""

    def __init__(self, message: str, field: str = "", offset: int = 0):
        super().__init__(message)
        self.field = field
        self.offset = offset


class NoModelLoaded(ShopwatchError):
    """Frame evaluation requested before any anomaly model was installed."""


class UnknownSku(ShopwatchError):
    """Query referenced a SKU that was never registered."""


class NoFreshObservation(ShopwatchError):
    """No shelf observation exists within the freshness window."""


class SinkUnavailable(ShopwatchError):
    """A notification sink rejected or could not accept a delivery."""


class InfeasibleSpec(ShopwatchError):
    """A generator spec cannot be realized (or a generator guarantee failed)."""

"""Exception hierarchy shared across the toolkit.

Every data-dependent failure raises a subclass of :class:`PhonekitError`
carrying enough position/symbol context to identify the offending input.
Silent dropping or silent NaN/inf propagation is never an option.
"""


class PhonekitError(Exception):
    """Base class for all toolkit errors."""


# --- IPA parsing / tokenization ---


class UnknownSymbol(PhonekitError):
    """A code point that is neither a known base, diacritic, nor whitespace."""

    def __init__(self, position: int, symbol: str):
        self.position = position
        self.symbol = symbol
        super().__init__(
            f"unknown symbol {symbol!r} (U+{ord(symbol):04X}) at index {position}"
        )


class DanglingDiacritic(PhonekitError):
    """A diacritic with no base symbol to attach to."""

    def __init__(self, position: int, symbol: str = ""):
        self.position = position
        self.symbol = symbol
        sym = f" {symbol!r}" if symbol else ""
        super().__init__(f"diacritic{sym} at index {position} has no preceding base")


class OutOfVocabulary(PhonekitError):
    """A symbol without an id in the active vocabulary."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"symbol {symbol!r} is not in the vocabulary")


class BlankInText(PhonekitError):
    """The reserved blank id appeared in a token stream to be detokenized."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"blank id at position {position} cannot be detokenized")


class EmptyCorpus(PhonekitError):
    """Vocabulary construction was asked to run on an empty corpus."""


# --- feature tables ---


class MalformedRow(PhonekitError):
    """A feature-table row whose width disagrees with the header."""

    def __init__(self, line: int, detail: str = ""):
        self.line = line
        super().__init__(f"malformed row at line {line}" + (f": {detail}" if detail else ""))


class DuplicatePhone(PhonekitError):
    """The same phone defined twice in one feature table."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"duplicate feature row for {symbol!r}")


class UnknownFeatureValue(PhonekitError):
    """A feature cell outside the allowed value set."""

    def __init__(self, line: int, column: int, value: str):
        self.line = line
        self.column = column
        self.value = value
        super().__init__(f"unknown feature value {value!r} at line {line}, column {column}")


class PhoneNotInTable(PhonekitError):
    """A base symbol with no feature row."""

    def __init__(self, base: str):
        self.base = base
        super().__init__(f"no feature row for base symbol {base!r}")


class DiacriticNotInTable(PhonekitError):
    """A diacritic with no feature modifier."""

    def __init__(self, diacritic: str):
        self.diacritic = diacritic
        super().__init__(f"no feature modifier for diacritic {diacritic!r}")


# --- CTC ---


class InfeasibleLength(PhonekitError):
    """Label sequence cannot be emitted in the available frames.

    Raised instead of silently returning an infinite loss.
    """

    def __init__(self, n_frames: int, min_frames: int):
        self.n_frames = n_frames
        self.min_frames = min_frames
        super().__init__(
            f"label sequence needs at least {min_frames} frames, got {n_frames}"
        )


class ShapeMismatch(PhonekitError):
    """Two matrices that must share a shape do not."""

    def __init__(self, shape_a, shape_b):
        self.shape_a = tuple(shape_a)
        self.shape_b = tuple(shape_b)
        super().__init__(f"shape mismatch: {self.shape_a} vs {self.shape_b}")


class Divergence(PhonekitError):
    """Training loss became non-finite."""

    def __init__(self, step: int):
        self.step = step
        super().__init__(f"loss became non-finite at step {step}")


# --- metrics / curation ---


class EmptyInput(PhonekitError):
    """An aggregate asked to run on no data."""


class TotalTooShort(PhonekitError):
    """An audio span too short to produce even one chunk."""

    def __init__(self, total_s: float, minimum_s: float):
        self.total_s = total_s
        self.minimum_s = minimum_s
        super().__init__(f"total duration {total_s} s is below the minimum {minimum_s} s")


class MalformedRecord(PhonekitError):
    """A manifest or event record that does not match its documented schema."""

    def __init__(self, detail: str, record_id: str | None = None):
        self.record_id = record_id
        prefix = f"record {record_id!r}: " if record_id else ""
        super().__init__(prefix + detail)


class TranscriptionError(PhonekitError):
    """A pseudo-label transcription that fails to parse or resolve features.

    ``model_index`` identifies which of the K transcriptions is at fault.
    """

    def __init__(self, model_index: int, cause: Exception):
        self.model_index = model_index
        super().__init__(f"transcription {model_index}: {cause}")
        self.__cause__ = cause

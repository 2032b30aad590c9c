"""Exception types shared by the codec, the container reader and the CLI."""


class ApfcError(Exception):
    """Base class for all codec errors."""


class UsageError(ApfcError, ValueError):
    """A caller violated a precondition (bad symbol, bad width, bad sigma...)."""


class CorruptStreamError(ApfcError):
    """The payload cannot be decoded: invalid table slot or bit overrun."""


class FormatError(ApfcError):
    """The container envelope is malformed."""

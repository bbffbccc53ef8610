"""Exception types shared across the codec."""


class CodecError(Exception):
    """Base class for all codec-specific failures."""


class DecodingError(CodecError):
    """A received word could not be decoded back to a codeword."""


class NoCandidateError(DecodingError):
    """No codeword is consistent with the received word."""


class AmbiguousCodewordError(DecodingError):
    """More than one codeword is consistent with the received word.

    Cannot occur when the received word really is one deletion or
    insertion away from a codeword; kept as a defensive signal for
    corrupted or adversarial inputs.
    """


class NotDecodableError(DecodingError):
    """Array decoding finished but the result is not a valid codeword."""


class EncodingError(CodecError):
    """Encoding failed outside the proven parameter range."""

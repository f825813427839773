"""Exception hierarchy shared by every lsbxor module."""


class StegoError(Exception):
    """Base class for all lsbxor errors."""


class MalformedBlockError(StegoError, ValueError):
    pass


class MalformedSharesError(StegoError, ValueError):
    pass


class CapacityError(StegoError):
    def __init__(self, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(
            f"payload needs {required} bits but the carrier holds only {available}"
        )


class ShareMismatchError(StegoError):
    """Key and stego images do not have the same geometry."""


class ShapeError(StegoError, ValueError):
    pass


# payload framing

class FrameError(StegoError):
    pass


class AuthenticationError(FrameError):
    """The recovered header is not a valid frame: wrong key or wrong stego image."""


class TruncatedFrameError(FrameError):
    pass


class UnknownKindError(FrameError):
    pass


class UnsupportedDimensionsError(FrameError, ValueError):
    pass


# PGM codec

class PGMError(StegoError):
    pass


class UnsupportedFormatError(PGMError):
    pass


class UnsupportedDepthError(PGMError):
    pass


class TruncatedImageError(PGMError):
    pass


class MalformedSampleError(PGMError):
    pass

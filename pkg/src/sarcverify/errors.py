"""
Exceptions raised by the group engine, the action constructors and the verifier.
Every error raised on purpose by the package derives from SarcError.
"""


class SarcError(Exception):
    pass


class IncompatibleDegreeError(SarcError, ValueError):
    pass


class MalformedCycleError(SarcError, ValueError):
    pass


class OutOfRangeError(SarcError, IndexError):
    pass


class ParameterError(SarcError, ValueError):
    pass


class NotTransitiveError(SarcError):
    pass


class NotSubgroupError(SarcError):
    pass


class CatalogError(SarcError):
    pass


class CapacityError(SarcError):
    """
    Raised when a computation would exceed one of the configured caps.

    Attributes
    ----------
        cap_name : str, name of the cap (see sarcverify.caps)
        cap : int, value of the cap that was hit
        required : int or None, the size the computation needed
    """

    def __init__(self, cap_name, cap, required=None, what=''):
        self.cap_name = cap_name
        self.cap = cap
        self.required = required
        s = f'{cap_name}={cap} exceeded'
        if required is not None:
            s += f' (needs {required})'
        if what:
            s += f': {what}'
        super().__init__(s)

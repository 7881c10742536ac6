"""Exception hierarchy shared by all modules.

Every error carries a ``kind`` string that the command-line front end
reports verbatim in its ``{"error": {"kind": ..., "detail": ...}}`` envelope.
"""


class JohnsonKitError(Exception):
    kind = "Error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


def _make(name):
    return type(name, (JohnsonKitError,), {"kind": name})


DimensionMismatch = _make("DimensionMismatch")
AlphabetMismatch = _make("AlphabetMismatch")
ParseError = _make("ParseError")
NotInFiltration = _make("NotInFiltration")
NotLieElement = _make("NotLieElement")
NotTorelli = _make("NotTorelli")
MissingArcData = _make("MissingArcData")
TruncationTooLow = _make("TruncationTooLow")
BadBlock = _make("BadBlock")
BadParameters = _make("BadParameters")
BadPartition = _make("BadPartition")
EmbeddingNotOrthogonal = _make("EmbeddingNotOrthogonal")
InvalidMappingClass = _make("InvalidMappingClass")
NotHomologous = _make("NotHomologous")
HomologyZero = _make("HomologyZero")
NotSeparatingClass = _make("NotSeparatingClass")
OmegaMismatch = _make("OmegaMismatch")
NotSymplectic = _make("NotSymplectic")
NotUnimodularPair = _make("NotUnimodularPair")

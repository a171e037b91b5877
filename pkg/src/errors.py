from typing import Optional


class GLOrderError(Exception):
    """Base class for every error raised by glorder."""


class InputError(GLOrderError, ValueError):
    pass


class WeightError(InputError):
    pass


class SpecFileError(InputError):
    pass


class ConfigError(GLOrderError, ValueError):
    pass


class StratumError(GLOrderError, ValueError):
    pass


class DegreeError(GLOrderError, ValueError):
    pass


class ArrowInsufficientError(GLOrderError):
    def __init__(self, d: int, n: int):
        self.d = d
        self.n = n
        super().__init__(
            f"arrow-insufficient: n={n} <= d={d}, degree-c maps are not spanned "
            f"by arrow paths; presentation refused"
        )


class GeneralPositionError(GLOrderError):
    def __init__(self, report, message: Optional[str] = None):
        self.report = report
        if message is None:
            shown = ", ".join(
                f"{{{','.join(str(i + 1) for i in subset)}}} rank {rank}"
                for subset, rank in report.violations[:5]
            )
            message = f"hyperplanes are not in general position: {shown}"
        super().__init__(message)

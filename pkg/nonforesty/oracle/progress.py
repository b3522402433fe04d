import time
from typing import Callable, Optional

from ..constants import SearchStage

ProgressCallback = Callable[[SearchStage, float, str], None]

def _ignore(stage: SearchStage, fraction: float, detail: str) ->  None:
    pass

class ProgressReporter:
    """Throttle calls to a progress callback.

    Counts finished work units out of ``total`` and forwards ``(stage, fraction, detail)`` to
    ``func`` at most once per ``period`` seconds, plus once on completion.

    :param total: The number of work units, or -1 if unknown.
    :param header: Prefix of the detail string.
    :param func: The callback; None to discard progress.
    :param period: The minimum number of seconds between two reports.
    """
    def _report(self):
        ct = time.monotonic()
        ## Windows may not give enough precision here
        delta = max(ct - self.start, 0.0000001)
        rate = self.running/delta
        self.last_report = ct
        if self.total > 0:
            fraction = min(1, max(0, self.running/self.total))
            self.func(self.stage, fraction, self.header + " %d/%d (%.1f/s)" % (self.running, self.total, rate))
        else:
            self.func(self.stage, 0, self.header + " %d/- (%.1f/s)" % (self.running, rate))

    def report(self, units: int = 1) ->  None:
        self.running += units
        if time.monotonic()-self.last_report > self.period or self.running == self.total:
            self._report()

    __call__ = report

    def __init__(self, total: int, header: str, func: Optional[ProgressCallback], stage: SearchStage = SearchStage.Search, period: float = 0):
        self.total = total
        self.running = 0
        self.header = header
        self.func = func if func is not None else _ignore
        self.stage = stage
        self.start = time.monotonic()
        self.last_report = self.start
        self.period = period

        self.func(stage, 0, header)

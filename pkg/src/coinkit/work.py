"""Optional work counters used by the scaling checks and the bench harness."""


class WorkCounter:
    """Accumulates abstract work units.

    Every solver that accepts ``counter=`` adds the number of elementary
    entries it touches: convolution output entries, brute-force scan
    entries, and DP cell updates.  Passing ``None`` disables counting.
    """

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, n):
        self.count += int(n)

    def __repr__(self):
        return f"WorkCounter({self.count})"


def tally(counter, n):
    if counter is not None:
        counter.add(n)

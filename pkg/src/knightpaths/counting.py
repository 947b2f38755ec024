"""Exact dynamic-programming path counting and exhaustive generation.

This is the ground-truth engine: a forward DP over the x-coordinate with
state (y, last direction), handling every combination of PathConstraints.
All counts are exact Python integers.

The DP state keeps last direction = 0 for the empty prefix so that zigzag
pruning and first-direction filtering need no special cases.  The altitude
band is clipped to |y| <= 2n (a size-n path cannot leave it).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .paths import DOWN, STEP_ORDER, UP, Path, PathConstraints, Step

#: Altitude filter: an int selects that exact altitude; these select sets.
ALL = "all"
NONNEG = "nonneg"

AltitudeFilter = int | str

GENERATE_CAP = 20


@dataclass(frozen=True)
class CountQuery:
    """A counting request: paths of the given size, filtered by altitude."""

    size: int
    altitude: AltitudeFilter = ALL
    constraints: PathConstraints = field(default_factory=PathConstraints)

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("size must be non-negative")
        if isinstance(self.altitude, str) and self.altitude not in (ALL, NONNEG):
            raise ValueError(f"unknown altitude filter {self.altitude!r}")


def _end_states(size: int, c: PathConstraints) -> dict[tuple[int, int], int]:
    """DP over x = 0..size; returns counts keyed by (altitude, last_dir)."""
    band_lo = -2 * size if c.min_y is None else max(c.min_y, -2 * size)
    band_hi = 2 * size if c.max_y is None else min(c.max_y, 2 * size)
    track_steps = c.steps is not None
    # state key: (y, dir) or (y, dir, steps_used)
    cols: list[dict[tuple, int]] = [{} for _ in range(size + 1)]
    start = (0, 0, 0) if track_steps else (0, 0)
    cols[0][start] = 1
    for x in range(size):
        for state, cnt in cols[x].items():
            y, d = state[0], state[1]
            for step in STEP_ORDER:
                if c.zigzag and d == step.direction:
                    continue
                if d == 0 and c.first_dir is not None and step.direction != c.first_dir:
                    continue
                nx = x + step.dx
                if nx > size:
                    continue
                ny = y + step.dy
                if ny < band_lo or ny > band_hi:
                    continue
                if track_steps:
                    used = state[2] + 1
                    if used > c.steps:
                        continue
                    key = (ny, step.direction, used)
                else:
                    key = (ny, step.direction)
                cols[nx][key] = cols[nx].get(key, 0) + cnt
    out: dict[tuple[int, int], int] = {}
    for state, cnt in cols[size].items():
        y, d = state[0], state[1]
        if c.steps is not None and (len(state) < 3 or state[2] != c.steps):
            continue
        if c.last_dir is not None and d != c.last_dir:
            continue
        if c.first_dir is not None and d == 0:
            continue  # empty path has no first step
        key = (y, d)
        out[key] = out.get(key, 0) + cnt
    return out


def count(query: CountQuery) -> int:
    """Exact number of paths matching the query."""
    end = _end_states(query.size, query.constraints)
    alt = query.altitude
    if isinstance(alt, int):
        return sum(c for (y, _), c in end.items() if y == alt)
    if alt == NONNEG:
        return sum(c for (y, _), c in end.items() if y >= 0)
    return sum(end.values())


def count_paths(
    size: int,
    altitude: AltitudeFilter = ALL,
    constraints: PathConstraints | None = None,
    **kwargs,
) -> int:
    """Convenience wrapper: count_paths(7, 0, zigzag=True)."""
    c = constraints if constraints is not None else PathConstraints(**kwargs)
    return count(CountQuery(size, altitude, c))


def count_row(
    n_max: int,
    altitude: AltitudeFilter = ALL,
    constraints: PathConstraints | None = None,
    **kwargs,
) -> list[int]:
    """[count(size=0), ..., count(size=n_max)] for a fixed query template."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    c = constraints if constraints is not None else PathConstraints(**kwargs)
    return [count(CountQuery(n, altitude, c)) for n in range(n_max + 1)]


def altitude_distribution(
    size: int, constraints: PathConstraints
) -> dict[int, int]:
    """Counts of matching paths by final altitude."""
    end = _end_states(size, constraints)
    out: dict[int, int] = {}
    for (y, _), c in end.items():
        out[y] = out.get(y, 0) + c
    return out


def step_count_distribution(
    size: int, constraints: PathConstraints
) -> dict[tuple[int, int], int]:
    """Counts keyed by (final altitude, number of steps)."""
    c = constraints
    band_lo = -2 * size if c.min_y is None else max(c.min_y, -2 * size)
    band_hi = 2 * size if c.max_y is None else min(c.max_y, 2 * size)
    cols: list[dict[tuple[int, int, int], int]] = [{} for _ in range(size + 1)]
    cols[0][(0, 0, 0)] = 1
    for x in range(size):
        for (y, d, used), cnt in cols[x].items():
            for step in STEP_ORDER:
                if c.zigzag and d == step.direction:
                    continue
                if d == 0 and c.first_dir is not None and step.direction != c.first_dir:
                    continue
                nx = x + step.dx
                if nx > size:
                    continue
                ny = y + step.dy
                if ny < band_lo or ny > band_hi:
                    continue
                key = (ny, step.direction, used + 1)
                cols[nx][key] = cols[nx].get(key, 0) + cnt
    out: dict[tuple[int, int], int] = {}
    for (y, d, used), cnt in cols[size].items():
        if c.last_dir is not None and d != c.last_dir:
            continue
        if c.first_dir is not None and d == 0:
            continue
        key = (y, used)
        out[key] = out.get(key, 0) + cnt
    return out


def generate(
    size: int, constraints: PathConstraints | None = None, cap: int = GENERATE_CAP, **kwargs
) -> list[Path]:
    """All paths of exactly the given size, lexicographic in STEP_ORDER.

    Exponential in size; refuses sizes beyond the cap.
    """
    if size > cap:
        raise ValueError(f"size {size} exceeds generation cap {cap}")
    c = constraints if constraints is not None else PathConstraints(**kwargs)
    out: list[Path] = []
    prefix: list[Step] = []

    def rec(x: int, y: int) -> None:
        if x == size:
            p = Path(tuple(prefix))
            if _accept(p, c):
                out.append(p)
            return
        for step in STEP_ORDER:
            if c.zigzag and prefix and prefix[-1].direction == step.direction:
                continue
            nx, ny = x + step.dx, y + step.dy
            if nx > size:
                continue
            if c.min_y is not None and ny < c.min_y:
                continue
            if c.max_y is not None and ny > c.max_y:
                continue
            prefix.append(step)
            rec(nx, ny)
            prefix.pop()

    rec(0, 0)
    return out


def _accept(p: Path, c: PathConstraints) -> bool:
    if c.steps is not None and p.step_count != c.steps:
        return False
    if c.first_dir is not None and (not p.steps or p.steps[0].direction != c.first_dir):
        return False
    if c.last_dir is not None and (not p.steps or p.steps[-1].direction != c.last_dir):
        return False
    return True


def count_primitive(size: int) -> int:
    """Zigzag paths of altitude 0 whose interior vertices avoid the x-axis.

    The empty path counts as 1.  Dedicated DP with y != 0 enforced for
    0 < x < size, so no exponential path generation is needed.
    """
    if size < 0:
        raise ValueError("size must be non-negative")
    if size == 0:
        return 1
    cols: list[dict[tuple[int, int], int]] = [{} for _ in range(size + 1)]
    cols[0][(0, 0)] = 1
    for x in range(size):
        for (y, d), cnt in cols[x].items():
            for step in STEP_ORDER:
                if d == step.direction:
                    continue
                nx = x + step.dx
                if nx > size:
                    continue
                ny = y + step.dy
                if abs(ny) > 2 * size:
                    continue
                if ny == 0 and nx < size:
                    continue
                key = (ny, step.direction)
                cols[nx][key] = cols[nx].get(key, 0) + cnt
    return sum(c for (y, _), c in cols[size].items() if y == 0)


def grand_row_stats(n_max: int) -> dict[str, list[int]]:
    """Per-size summaries for unconstrained (non-zigzag) paths in one DP pass.

    Returns lists indexed by size: total count, count ending at y >= 0,
    count ending at y > 0, count ending on the axis, and the sum of final
    altitudes over paths ending at y > 0.
    """
    cols: list[dict[int, int]] = [{} for _ in range(n_max + 1)]
    cols[0][0] = 1
    total, nonneg, positive, axis, alt_sum = [], [], [], [], []
    for x in range(n_max + 1):
        col = cols[x]
        total.append(sum(col.values()))
        nonneg.append(sum(c for y, c in col.items() if y >= 0))
        positive.append(sum(c for y, c in col.items() if y > 0))
        axis.append(col.get(0, 0))
        alt_sum.append(sum(y * c for y, c in col.items() if y > 0))
        if x < n_max:
            for y, cnt in col.items():
                for step in STEP_ORDER:
                    nx = x + step.dx
                    if nx <= n_max:
                        ny = y + step.dy
                        cols[nx][ny] = cols[nx].get(ny, 0) + cnt
    return {
        "total": total,
        "nonneg": nonneg,
        "positive": positive,
        "axis": axis,
        "altitude_sum": alt_sum,
    }

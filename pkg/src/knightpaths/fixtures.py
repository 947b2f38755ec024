"""Reference sequences embedded for hermetic verification.

These are the known values the engines must reproduce exactly.  OEIS
identifiers are recorded as metadata where a sequence is catalogued; no
network access is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    terms: tuple[int, ...]
    oeis: str | None = None


#: Grand knight's path counts by size and altitude, rows n = 0..9, columns
#: k = 0..9 (counts are symmetric in the sign of k).
GRAND_TABLE: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (2, 1, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 2, 3, 2, 0, 0, 1, 0, 0, 0),
    (8, 6, 1, 3, 4, 3, 0, 0, 1, 0),
    (6, 12, 16, 12, 3, 4, 5, 4, 0, 0),
    (44, 33, 18, 21, 27, 20, 6, 5, 6, 5),
    (60, 76, 95, 72, 40, 34, 41, 30, 10, 6),
    (256, 210, 154, 155, 177, 135, 75, 52, 58, 42),
    (460, 520, 581, 480, 335, 288, 299, 228, 126, 76),
)
GRAND_TABLE_OEIS = "A096608"

#: Zigzag path counts, rows k = 0..4, columns n = 0..15.
ZIGZAG_TABLE: tuple[tuple[int, ...], ...] = (
    (1, 0, 2, 0, 4, 2, 10, 6, 22, 16, 52, 44, 126, 116, 306, 302),
    (0, 0, 1, 2, 2, 4, 4, 10, 11, 26, 28, 64, 71, 160, 183, 402),
    (0, 1, 0, 1, 0, 3, 2, 7, 6, 16, 18, 40, 52, 100, 142, 252),
    (0, 0, 0, 0, 1, 0, 2, 0, 6, 2, 16, 8, 41, 28, 107, 90),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 0, 10, 2, 30, 10, 85),
)

#: Zigzag paths by exact vertex-altitude span, rows k = 1..3, columns n = 0..16.
SPAN_TABLE: tuple[tuple[int, ...], ...] = (
    (0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2),
    (0, 2, 2, 6, 6, 12, 14, 24, 30, 46, 60, 88, 118, 168, 228, 320, 438),
    (0, 0, 0, 0, 2, 4, 10, 16, 32, 52, 94, 148, 252, 392, 648, 996, 1612),
)

SEQUENCES: dict[str, Fixture] = {
    "grand-total": Fixture(
        "grand-total",
        "all grand knight's paths by size",
        (1, 2, 6, 16, 44, 120, 328, 896, 2448, 6688, 18272),
        oeis="A002605",
    ),
    "grand-nonneg": Fixture(
        "grand-nonneg",
        "grand knight's paths ending at altitude >= 0",
        (1, 1, 4, 8, 26, 63, 186, 478, 1352, 3574, 9927, 26640, 73354),
    ),
    "grand-altitude-sum": Fixture(
        "grand-altitude-sum",
        "sum of final altitudes over grand paths ending at altitude >= 0",
        (0, 2, 5, 20, 56, 180, 516, 1552, 4452, 13000, 37120, 106684, 303090),
    ),
    "zigzag-total": Fixture(
        "zigzag-total",
        "all grand zigzag knight's paths by size",
        (1, 2, 4, 6, 10, 16, 26, 42, 68, 110, 178, 288, 466, 754, 1220, 1974, 3194),
        oeis="A128588",
    ),
    "zigzag-nonneg": Fixture(
        "zigzag-nonneg",
        "zigzag paths ending at altitude >= 0",
        (1, 1, 3, 3, 7, 9, 18, 24, 45, 63, 115, 166, 296, 435, 763, 1138, 1973),
    ),
    "zigzag-primitive": Fixture(
        "zigzag-primitive",
        "zigzag axis-enders touching the x-axis only at the endpoints",
        (1, 0, 2, 0, 2, 2, 4, 2, 4, 2, 6, 2, 10, 2, 18, 2, 36, 2, 76, 2, 166, 2, 372),
    ),
    "above-line-m2": Fixture(
        "above-line-m2",
        "zigzag paths staying weakly above y = -2",
        (1, 2, 4, 6, 9, 15, 23, 38, 58, 95, 147, 239, 373, 603, 947, 1525),
    ),
    "tube1-axis": Fixture(
        "tube1-axis",
        "zigzag paths inside [-1, +1] ending on the x-axis",
        (1, 0, 0, 0, 2, 2, 2, 2, 4, 6, 8, 10, 14, 20, 28, 38, 52, 72, 100),
        oeis="A052535/A158943 interleaved, doubled",
    ),
    "band-0-2-axis": Fixture(
        "band-0-2-axis",
        "zigzag paths inside [0, +2] ending on the x-axis",
        (1, 0, 1, 0, 2, 0, 4, 0, 7, 0, 14, 0, 26, 0, 50, 0, 95, 0, 181),
        oeis="A052535 at even sizes",
    ),
}

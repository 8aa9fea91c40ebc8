"""Bundled example data.

Distances (km) from the start of a gas pipeline to the 18 points where
a magnetic-flux inspection pig flagged wall-loss corrosion, ordered
along the line. The near-tied neighbouring pairs (44.324/44.325,
45.733/45.734, 50.369/50.370) are genuine repeat indications a metre
apart, not duplicates.
"""

from .inference import RecordSequence

__all__ = ["CORROSION_SURVEY_KM", "demo_records"]

CORROSION_SURVEY_KM = (
    0.772,
    2.731,
    3.174,
    16.580,
    25.540,
    25.580,
    32.224,
    32.709,
    34.714,
    37.608,
    44.324,
    44.325,
    45.733,
    45.734,
    46.500,
    50.369,
    50.370,
    50.545,
)


def demo_records(m=None):
    """The survey as a RecordSequence, optionally truncated to m points."""
    pos = CORROSION_SURVEY_KM if m is None else CORROSION_SURVEY_KM[:m]
    return RecordSequence(pos, label="pipeline corrosion survey")

"""
Named instance documents.
"""

from .spec_io import TopoframeDocument
from .spec_io import parse

FIXTURE_DOCUMENTS = {
    # Two discrete points: every subset is open.
    "discrete_pair": """\
space powerset 2
tau {} {1} {2} {1,2}
fn f = 2@{1} ; 0@{2}
fn g = 3@{1} ; 5@{2}
""",
    # Nested opens on three points; not extremally disconnected.
    "three_point_nested": """\
space powerset 3
tau {} {1} {2} {1,2} {1,2,3}
""",
    # Two points with only the trivial opens.
    "indiscrete_pair": """\
space powerset 2
tau {} {1,2}
""",
    # bottom < x, y < x v y < top with only the trivial opens. The frame is
    # not extremally disconnected while the ring is still selfinjective.
    "converse_exhibit": """\
poset 3
cover 1 3
cover 2 3
tau {} {1,2,3}
""",
}


def load_fixture(name: str) -> TopoframeDocument:
    return parse(FIXTURE_DOCUMENTS[name])

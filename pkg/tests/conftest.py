from hypothesis import strategies as st

from segchar import Multisegment, Segment
from segchar.verify import enumerate_multisegments


def family(max_height, lo, hi):
    """Exhaustive list of nonzero multisegments for a window."""
    return list(enumerate_multisegments(max_height, (lo, hi)))


segments = st.builds(
    lambda a, length: Segment(a, a + length - 1),
    st.integers(-3, 3),
    st.integers(1, 3),
)

multisegments = st.lists(segments, min_size=0, max_size=4).map(
    lambda segs: Multisegment((s, 1) for s in segs)
)

nonzero_multisegments = st.lists(segments, min_size=1, max_size=4).map(
    lambda segs: Multisegment((s, 1) for s in segs)
)

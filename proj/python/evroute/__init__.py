"""Time-dependent electric-vehicle routing (C++ core)."""

import os
from pathlib import Path

_packaged = Path(__file__).with_name("central-arkansas.json")
if "EVROUTE_FIXTURE" not in os.environ and _packaged.exists():
    os.environ["EVROUTE_FIXTURE"] = str(_packaged)

from ._evroute import *  # noqa: E402,F401,F403
from ._evroute import bundled_fixture_path, load_network  # noqa: E402


def load_fixture(verified_only=False):
    """The bundled case-study network; `verified_only` keeps edges 1-7."""
    net = load_network(bundled_fixture_path())
    if verified_only:
        net = net.with_edges_only([e.id for e in net.edges if not e.unverified])
    return net

# Copyright 2026 the grassroots contributors. Licensed under the Apache
# License, Version 2.0. See the LICENSE file at the root of this
# distribution or at http://www.apache.org/licenses/LICENSE-2.0
"""Transactions-based distributed transition systems.

Three platforms (gsn, gc, gf), a deterministic seeded simulator with
replayable traces, and a bounded brute-force checker for the oblivious /
interactive / grassroots properties.  The heavy lifting lives in the
compiled `_core` extension; configurations cross the boundary as
``{agent: state-string}`` dicts and transactions as their label text.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # in-tree builds put _core next to the package on sys.path
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401

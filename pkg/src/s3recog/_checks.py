"""Opt-in runtime contract verification.

Enabled by setting ``S3RECOG_CHECK_CONTRACTS=1`` (the test suite does this).
When on, ``divide`` re-verifies its reconstruction identity on every call and
every Groebner basis produced is handed to the registered observers.
"""

import os

enabled = os.environ.get("S3RECOG_CHECK_CONTRACTS", "") not in ("", "0")

basis_observers = []


def notify_basis(basis, ideal):
    for observer in basis_observers:
        observer(basis, ideal)

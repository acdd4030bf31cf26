# Copyright 2026 The rislink Authors
# SPDX-License-Identifier: Apache-2.0
"""Python bindings for the rislink RIS link-level simulator."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

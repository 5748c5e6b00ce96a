"""Bundled PD fixtures.

``ZCOLOR_FIXTURES`` points the loader at another directory of ``*.pd``
files.
"""

from __future__ import annotations

import os
from pathlib import Path

from ..diagram import Diagram, parse_pd

# the zero-determinant links from the colorable table
TABLE_LINKS = (
    "L8n6", "L8n8", "L9n18", "L9n19", "L9n27", "L10n32", "L10n36", "L10n56",
    "L10n57", "L10n59", "L10n91", "L10n93", "L10n94", "L10n104", "L10n107",
    "L10n111",
)


def fixture_dir() -> Path:
    override = os.environ.get("ZCOLOR_FIXTURES")
    return Path(override) if override else Path(__file__).parent


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.pd"))


def fixture_path(name: str) -> Path:
    return fixture_dir() / f"{name}.pd"


def load_fixture(name: str) -> Diagram:
    return parse_pd(fixture_path(name).read_text())

#!/usr/bin/env python3
"""Capture real service responses for the golden fixture bundle into
frontend/tests/fixtures/api.json (a path -> payload map). The UI test
suite replays these, so every number it checks originated from the API.
"""

from __future__ import annotations

import json
from pathlib import Path
from urllib.parse import quote

from fastapi.testclient import TestClient

from chartalign import bundle as bundle_io
from chartalign.service import create_app

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "tests" / "fixtures" / "api.json"


def enc(text: str) -> str:
    # match encodeURIComponent: also escape the sub-delims it escapes
    return quote(text, safe="")


def main() -> None:
    bundle = bundle_io.load_file(ROOT / "tests" / "fixtures" / "golden_bundle.json")
    client = TestClient(create_app(bundle))

    payloads: dict[str, object] = {}

    def grab(path: str) -> dict | list:
        resp = client.get(path)
        resp.raise_for_status()
        payloads[path] = resp.json()
        return payloads[path]

    grab("/api/summary")
    artists = grab("/api/artists")
    for artist in artists:
        name = enc(artist["name_norm"])
        trajectory = grab(f"/api/artists/{name}/trajectory")
        for bubble in trajectory["decades"]:
            profile = grab(f"/api/artists/{name}/decades/{bubble['decade']}")
            for song in profile["songs"]:
                if song["has_features"]:
                    grab(
                        f"/api/artists/{name}/decades/{bubble['decade']}"
                        f"/songs/{enc(song['title_norm'])}"
                    )

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(
        json.dumps(payloads, sort_keys=True, ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {len(payloads)} payloads to {OUT}")


if __name__ == "__main__":
    main()

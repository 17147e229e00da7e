"""3-sun embeddings of Steiner triple systems at minimum admissible order.

Thin wrapper over the _sunweave extension: systems, designs and
certificates are plain dicts mirroring the JSON formats of the CLI.
"""

import json

import _sunweave
from _sunweave import (
    ParseError,
    SearchError,
    sts_order_admissible,
    sun_order_admissible,
    u_min,
)

__all__ = [
    "ParseError",
    "SearchError",
    "bull_sun_design",
    "embed",
    "generate_sts",
    "kts",
    "parse_design_text",
    "sts13",
    "sts_order_admissible",
    "sun_order_admissible",
    "sun_system",
    "u_min",
    "verify_design",
    "verify_embedding",
]


def generate_sts(n):
    """Steiner triple system of order n as {"order", "triples"}."""
    return json.loads(_sunweave.generate_sts_json(n))


def sts13(variant):
    """One of the two STS(13) classes; variant is 'cyclic' or 'noncyclic'."""
    return json.loads(_sunweave.sts13_json(variant))


def kts(v):
    """Kirkman system for v in {9, 21, 33}, with a "resolution" array."""
    return json.loads(_sunweave.kts_json(v))


def sun_system(m, seed=1069):
    """3-sun decomposition of K_m as a design dict (disk-cached)."""
    return json.loads(_sunweave.sun_system_json(m, seed))


def bull_sun_design(k, h):
    """{bull, sun} decomposition of K_{12k+h} for h in {5, 8, 9, 12}, k >= 3."""
    return json.loads(_sunweave.bull_sun_design_json(k, h))


def embed(sts, seed=1069):
    """Embed an STS into a 3-sun system of order n + u_min(n).

    Returns a certificate dict: {"n", "u", "sts", "design", "map"}.
    """
    return json.loads(_sunweave.embed_json(json.dumps(sts), seed))


def verify_embedding(cert):
    """(ok, violations) for a certificate dict."""
    return _sunweave.verify_embedding_json(json.dumps(cert))


def verify_design(design):
    """(ok, summary) for a design dict."""
    return _sunweave.verify_design_json(json.dumps(design))


def parse_design_text(text):
    """Design dict from the one-block-per-line text form."""
    return json.loads(_sunweave.design_text_to_json(text))

"""GHZ extraction certificates for hypergraph networks of GHZ states.

Hypergraphs and certificates are plain dicts in the same JSON schema the
command-line tool reads and writes.
"""

import json

from . import _core
from ._core import Error

__all__ = ["Error", "connectivity", "epr", "certify", "verify"]


def connectivity(hypergraph):
    """Edge connectivity, a minimum cut and the min-cut rank."""
    return json.loads(_core.connectivity(json.dumps(hypergraph)))


def epr(hypergraph, a, b):
    """EPR rate 1/t between vertices a and b with t edge-disjoint paths."""
    return json.loads(_core.epr(json.dumps(hypergraph), a, b))


def certify(hypergraph, n, seed=0):
    """Synthesizes a degeneration certificate for GHZ^H_n."""
    return json.loads(_core.certify(json.dumps(hypergraph), n, seed))


def verify(certificate, deep=False):
    """Verification report; report["ok"] is True when every check passed."""
    return json.loads(_core.verify(json.dumps(certificate), deep))

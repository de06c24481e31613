"""Random recursive trees: exact laws, simulation and limit series."""

import json

from ._rrtlab import (
    exact_dist,
    expected_c,
    expected_d,
    g_toll,
    hpl,
    joint_table,
    ks_two_sample,
    psi,
    rt_build,
    sample_limits,
    simulate,
    t_map,
    toll_c,
    toll_d,
    tpl,
    verify_json,
    wiener,
)


def verify(level="fast", criteria=(), threads=0):
    """Run acceptance criteria and return the report as a dict."""
    return json.loads(verify_json(level, list(criteria), threads))


__all__ = [
    "exact_dist", "expected_c", "expected_d", "g_toll", "hpl", "joint_table", "ks_two_sample",
    "psi", "rt_build", "sample_limits", "simulate", "t_map", "toll_c", "toll_d", "tpl",
    "verify", "verify_json", "wiener",
]

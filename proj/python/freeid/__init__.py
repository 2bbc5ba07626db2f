import json

from ._core import (
    FreeidError,
    G,
    count_connected_pairings,
    density,
    dyck_factorial,
    free_cumulants_of_mu_c,
    run_cli,
    s_via_trees,
    stationary,
)
from . import _core


def fid_test(c, order=200):
    return json.loads(_core.fid_test_json(str(c), order))


def lr_coproduct(tree):
    return json.loads(_core.lr_coproduct_json(tree))


def bf_coproduct(tree):
    return json.loads(_core.bf_coproduct_json(tree))


__all__ = [
    "FreeidError", "G", "bf_coproduct", "count_connected_pairings", "density", "dyck_factorial",
    "fid_test", "free_cumulants_of_mu_c", "lr_coproduct", "run_cli", "s_via_trees", "stationary",
]

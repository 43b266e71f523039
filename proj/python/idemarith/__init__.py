"""Exact arithmetic functions, idempotent systems and Ramanujan-sum operators."""

from ._core import (
    DomainError,
    ShapeError,
    c_operator,
    crt_solve,
    det_c0,
    divisors,
    factorize,
    jordan_totient,
    lcm_tuple_count,
    mobius,
    omega,
    projection,
    ramanujan_sum,
    ramanujan_sum_roots,
    rf_transform,
    run_suite,
    suite_names,
    t_operator,
    tau,
    totient,
    trace_identities,
)

__all__ = [name for name in dir() if not name.startswith("_")]

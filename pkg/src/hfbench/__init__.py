"""Desk-scale workbench for hereditarily finite sets, bounded-quantifier
definability, set-theoretic arithmetic, rational proxies for open and closed
classes of reals, and computable Dedekind cuts."""
from .hf import (
    EMPTY, Caps, CapExceeded, CodeOverflow, HfError, HfOrder, HfSet,
    ackermann_code, as_pair, canonicalize, caps, finite_sequences, format_set,
    from_ackermann, get_caps, hf_compare, is_von_neumann, make_set, pair,
    parse_literal, powerset_fin, random_set, rank, set_caps, tuple_, von_neumann,
)
from .rudimentary import eval_basis, eval_derived, eval_term
from .logic import comprehend, comprehend_tuples, eval_relativized, free_vars, is_delta0
from .parser import ParseError, parse_formula, parse_term
from .arithmetic import (
    check_equivalence, hf_to_int, hf_to_nat, hf_to_rat, int_to_hf, leq_graph, nat_leq,
    nat_to_hf, plus_graph, plus_graph_by_formula, plus_witness, quotient, rat_less_sets,
    rat_to_hf, times_graph, times_graph_by_formula, times_witness,
)
from .realline import (
    ClosedProxy, OpenProxy, check_chain, closed_complement, closed_member, closed_proxy,
    covers_interval, is_dense_witness, open_complement, open_member, open_proxy,
    proxy_intersect, proxy_union, widen_real_proxy,
)
from .cuts import (
    CauchySeq, Cut, NeedsMoreAccuracy, Order, cauchy_limit, cut, cut_add, cut_compare,
    cut_lub, cut_member, cut_neg, eval_cut_expr, spot_check, sqrt2, try_member,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "Caps", "CapExceeded", "CodeOverflow", "HfError", "HfOrder", "HfSet",
    "ackermann_code", "as_pair", "canonicalize", "caps", "finite_sequences",
    "format_set", "from_ackermann", "get_caps", "hf_compare", "is_von_neumann",
    "make_set", "pair", "parse_literal", "powerset_fin", "random_set", "rank",
    "set_caps", "tuple_", "von_neumann",
    "eval_basis", "eval_derived", "eval_term",
    "comprehend", "comprehend_tuples", "eval_relativized", "free_vars", "is_delta0",
    "ParseError", "parse_formula", "parse_term",
    "check_equivalence", "hf_to_int", "hf_to_nat", "hf_to_rat", "int_to_hf", "leq_graph",
    "nat_leq", "nat_to_hf", "plus_graph", "plus_graph_by_formula", "plus_witness",
    "quotient", "rat_less_sets", "rat_to_hf", "times_graph", "times_graph_by_formula",
    "times_witness",
    "ClosedProxy", "OpenProxy", "check_chain", "closed_complement", "closed_member",
    "closed_proxy", "covers_interval", "is_dense_witness", "open_complement",
    "open_member", "open_proxy", "proxy_intersect", "proxy_union", "widen_real_proxy",
    "CauchySeq", "Cut", "NeedsMoreAccuracy", "Order", "cauchy_limit", "cut", "cut_add",
    "cut_compare", "cut_lub", "cut_member", "cut_neg", "eval_cut_expr", "spot_check",
    "sqrt2", "try_member",
]

"""towerlab: power-tower equation solving with certified log-space brackets,
inequality margin sweeps, and constructive irrationality witnesses."""

from .errors import ConditionViolated, DomainError, OutOfInterval, TowerlabError
from .inequalities import (
    Inequality,
    MarginReport,
    lemma3_margin,
    lemma4a_margin,
    lemma4b_margin,
    sweep,
    witness_g,
)
from .solver import (
    Bracket,
    Provenance,
    SolveResult,
    TowerEquation,
    bracket_tower,
    lambert_w0,
    solve_tower,
    solve_via_lambert,
    tower_residual,
)
from .witnesses import (
    BaseKind,
    Classification,
    ClassificationKind,
    PowerPair,
    TriplePower,
    classify_xx_target,
    is_prime,
    log_construction_pair,
    lord_pair,
    parse_rational,
    thin_set_member,
    triple_sqrt_power,
    verify_pair,
)

__version__ = "0.1.0"

__all__ = [
    "TowerlabError",
    "DomainError",
    "ConditionViolated",
    "OutOfInterval",
    "TowerEquation",
    "Bracket",
    "Provenance",
    "SolveResult",
    "tower_residual",
    "bracket_tower",
    "solve_tower",
    "lambert_w0",
    "solve_via_lambert",
    "Inequality",
    "MarginReport",
    "lemma3_margin",
    "witness_g",
    "lemma4a_margin",
    "lemma4b_margin",
    "sweep",
    "BaseKind",
    "PowerPair",
    "lord_pair",
    "log_construction_pair",
    "verify_pair",
    "TriplePower",
    "triple_sqrt_power",
    "ClassificationKind",
    "Classification",
    "classify_xx_target",
    "thin_set_member",
    "is_prime",
    "parse_rational",
    "__version__",
]

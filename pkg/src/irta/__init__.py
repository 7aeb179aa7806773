"""Single-clock integer-reset timed automata: exact simulation and analysis.

An integer-reset timed automaton (IRTA) only resets its clock on edges whose
guard pins the clock to an integer value.  That discipline makes the whole
class determinizable: all clocks share the fractional part of absolute time,
so a subset construction over (location, integer offset class) pairs yields
a language-equivalent deterministic automaton, which in turn unlocks
complement, product, emptiness with witnesses, inclusion, and equivalence.
"""

from .analysis import (
    Product,
    complement,
    complete,
    equivalent,
    includes,
    is_empty,
    product,
)
from .determinize import SubsetState, determinize, successor_subset
from .errors import (
    AlphabetMismatchError,
    InvariantViolationError,
    IrtaError,
    NegativeTimeError,
    NonMonotoneTimeError,
    NotDeterministicError,
    NotIrtaError,
    TimeRegressionError,
    UnknownLetterError,
    ZeroDenominatorError,
)
from .fuzz import (
    DEFAULT_DENOMINATORS,
    FuzzReport,
    fuzz_equivalence,
    random_irta,
    random_word,
)
from .guards import (
    OffsetClass,
    Region,
    atomic_regions,
    eval_guard,
    merge_adjacent,
    normalize_guard,
    region_of,
    region_satisfies,
    regions_covered,
    shift_guard_to_n,
)
from .io_format import (
    ParseError,
    SourceSpan,
    format_edge,
    format_timed_word,
    parse_automaton,
    parse_timed_word,
    print_automaton,
    to_dot,
)
from .model import (
    Automaton,
    Edge,
    Guard,
    TimedWord,
    ValidationReport,
    validate_wellformed,
)
from .rational import Rational, fractional_part, is_integer, rational
from .report import write_report
from .semantics import (
    Config,
    ConfigSet,
    assert_shared_fraction,
    initial_configs,
    member,
    step_configs,
)
from .validate import (
    DeterminismReport,
    IntegerResetReport,
    check_deterministic,
    check_integer_reset,
    is_irta,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError",
    "Automaton",
    "Config",
    "ConfigSet",
    "DEFAULT_DENOMINATORS",
    "DeterminismReport",
    "Edge",
    "FuzzReport",
    "Guard",
    "IntegerResetReport",
    "InvariantViolationError",
    "IrtaError",
    "NegativeTimeError",
    "NonMonotoneTimeError",
    "NotDeterministicError",
    "NotIrtaError",
    "OffsetClass",
    "ParseError",
    "Product",
    "Rational",
    "Region",
    "SourceSpan",
    "SubsetState",
    "TimeRegressionError",
    "TimedWord",
    "UnknownLetterError",
    "ValidationReport",
    "ZeroDenominatorError",
    "assert_shared_fraction",
    "atomic_regions",
    "check_deterministic",
    "check_integer_reset",
    "complement",
    "complete",
    "determinize",
    "equivalent",
    "eval_guard",
    "format_edge",
    "format_timed_word",
    "fractional_part",
    "fuzz_equivalence",
    "includes",
    "initial_configs",
    "is_empty",
    "is_integer",
    "is_irta",
    "member",
    "merge_adjacent",
    "normalize_guard",
    "parse_automaton",
    "parse_timed_word",
    "print_automaton",
    "product",
    "random_irta",
    "random_word",
    "rational",
    "region_of",
    "region_satisfies",
    "regions_covered",
    "shift_guard_to_n",
    "step_configs",
    "successor_subset",
    "to_dot",
    "validate_wellformed",
    "write_report",
]

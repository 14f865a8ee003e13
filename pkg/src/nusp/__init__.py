"""Networks of uniform splicing processors, and a compiler from nondeterministic Turing machines."""

from .compiler import CompiledNetwork, CompileError, compile_machine, encode_input, explain
from .filters import STRONG, WEAK, Filter, filter_set, passes
from .network import (
    LITERAL,
    PRESERVE,
    Configuration,
    Network,
    RunLimits,
    Trace,
    TraceEvent,
    UniformProcessor,
    Verdict,
    VerdictKind,
    communication_step,
    initial_configuration,
    is_halting,
    run,
    splicing_step,
    time_profile,
    validate,
)
from .splicing import LAMBDA, SplicingRule, alph, chars, sigma, splice_pair, word
from .turing import TMConfiguration, Transition, TuringMachine, tm_run, tm_successors

__version__ = "0.1.0"

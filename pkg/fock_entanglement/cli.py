import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, TextIO, Union

from tqdm import tqdm

from fock_entanglement.bridge import (
    cross_check,
    first_to_second,
    reports_to_dataframe,
    second_to_first,
)
from fock_entanglement.data_generator import generate, generate_random, read_state, read_states
from fock_entanglement.data_objects import (
    DEFAULT_TOLERANCE,
    FockVector,
    Statistics,
    Symmetry,
    TwoParticleState,
    complex_to_json,
)
from fock_entanglement.errors import (
    BipartitionSyntaxError,
    BudgetExceededError,
    ExpressionSyntaxError,
    FockError,
    SectorOverflowError,
    StateFormatError,
)
from fock_entanglement.gmw import classify
from fock_entanglement.operators import expectation, normal_order, parse
from fock_entanglement.separability import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_PAIRS,
    ModeBipartition,
    correlation_oracle,
    mode_separability_rank,
)

logger = logging.getLogger("fock-entanglement")

COMMANDS = ("analyze", "gmw", "convert", "expr", "oracle", "random", "crosscheck")

EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


@dataclass
class RunConfig:
    command: str
    state: Optional[str] = None
    bipartition: Optional[str] = None
    tol: float = DEFAULT_TOLERANCE
    max_degree: int = DEFAULT_MAX_DEGREE
    max_pairs: int = DEFAULT_MAX_PAIRS
    seed: int = 0
    expr: Optional[str] = None
    format: Optional[str] = None
    output: Optional[str] = None
    num_modes: int = 2
    num_particles: int = 2
    statistics: str = "bose"
    symmetry: Optional[str] = None
    num_of_examples: int = 1
    batch: bool = False
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}, expected one of {COMMANDS}")
        if not self.tol > 0:
            raise ValueError(f"Tolerance must be positive, got {self.tol}")
        if self.max_degree < 2:
            raise ValueError(f"max_degree must be at least 2, got {self.max_degree}")
        if self.format not in (None, "first", "second"):
            raise ValueError(f"Format must be 'first' or 'second', got {self.format!r}")
        if self.workers < 1:
            raise ValueError(f"Number of workers must be positive, got {self.workers}")

    def require(self, name: str):
        value = getattr(self, name)
        if value is None:
            raise ValueError(f"Command '{self.command}' needs --{name.replace('_', '-')}")
        return value


def _second_quantized(state: Union[FockVector, TwoParticleState]) -> FockVector:
    if isinstance(state, TwoParticleState):
        return first_to_second(state)
    return state


def _first_quantized(state: Union[FockVector, TwoParticleState]) -> TwoParticleState:
    if isinstance(state, FockVector):
        return second_to_first(state)
    return state


def _analyze(config: RunConfig) -> Dict:
    v = _second_quantized(read_state(config.require("state")))
    bipartition = ModeBipartition.parse(config.require("bipartition"))
    return mode_separability_rank(v, bipartition, tol=config.tol).to_dict()


def _oracle(config: RunConfig) -> Dict:
    v = _second_quantized(read_state(config.require("state")))
    bipartition = ModeBipartition.parse(config.require("bipartition"))
    verdict = correlation_oracle(
        v, bipartition, max_degree=config.max_degree, tol=config.tol, max_pairs=config.max_pairs
    )
    return verdict.to_dict()


def _gmw(config: RunConfig) -> Dict:
    t = _first_quantized(read_state(config.require("state")))
    return classify(t, tol=config.tol).to_dict()


def _convert(config: RunConfig) -> Dict:
    state = read_state(config.require("state"))
    target = config.format
    if target is None:
        target = "second" if isinstance(state, TwoParticleState) else "first"
    if target == "second":
        return _second_quantized(state).to_dict()
    return _first_quantized(state).to_dict()


def _expr(config: RunConfig) -> Dict:
    expression = parse(config.require("expr"))
    if config.state is None:
        return {"normal_form": str(normal_order(expression, Statistics(config.statistics)))}
    v = _second_quantized(read_state(config.state))
    return {
        "normal_form": str(normal_order(expression, v.statistics)),
        "expectation": complex_to_json(expectation(expression, v)),
    }


def _random(config: RunConfig) -> Union[Dict, List[Dict]]:
    symmetry = Symmetry(config.symmetry) if config.symmetry else None
    if config.num_of_examples == 1:
        state = generate_random(
            config.seed, config.num_modes, config.num_particles, Statistics(config.statistics), symmetry
        )
        return state.to_dict()
    states = generate(
        config.seed,
        config.num_modes,
        num_particles=config.num_particles,
        statistics=Statistics(config.statistics),
        symmetry=symmetry,
        num_of_examples=config.num_of_examples,
    )
    return [state.to_dict() for state in states]


def _crosscheck(config: RunConfig) -> Union[Dict, List[Dict]]:
    states = [_first_quantized(state) for state in read_states(config.require("state"))]
    if not config.batch:
        if len(states) != 1:
            raise StateFormatError(f"Got {len(states)} states; use --batch for state lists")
        return cross_check(states[0], tol=config.tol).to_dict()

    # executor.map yields in input order
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        reports = list(
            tqdm(
                executor.map(lambda t: cross_check(t, tol=config.tol), states),
                total=len(states),
                desc="Cross-checking states",
                disable=not config.verbose,
            )
        )
    summary = reports_to_dataframe(reports)
    if len(summary):
        counts = summary.groupby("case")["agree"].agg(["count", "sum"])
        logger.info(f"Agreement per case (count / agreeing):\n{counts}")
    return [report.to_dict() for report in reports]


HANDLERS = {
    "analyze": _analyze,
    "gmw": _gmw,
    "convert": _convert,
    "expr": _expr,
    "oracle": _oracle,
    "random": _random,
    "crosscheck": _crosscheck,
}


def run(config: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """
    Execute one command and print its JSON result.
    :param config: validated run configuration
    :param stdout: stream for the JSON result (sys.stdout by default)
    :return: 0 on success, 2 on parse errors, 3 on precondition violations, 4 when
    a particle-number or pair budget is exceeded
    """
    stdout = stdout or sys.stdout
    try:
        payload = HANDLERS[config.command](config)
    except ExpressionSyntaxError as e:
        logger.error(f"Expression syntax error at offset {e.offset}: {e}")
        return EXIT_PARSE_ERROR
    except (StateFormatError, BipartitionSyntaxError, OSError) as e:
        logger.error(f"Cannot read input: {e}")
        return EXIT_PARSE_ERROR
    except (SectorOverflowError, BudgetExceededError) as e:
        logger.error(f"Budget exceeded: {e}")
        return EXIT_BUDGET
    except (FockError, ValueError) as e:
        logger.error(f"Precondition violated: {e}")
        return EXIT_PRECONDITION

    text = json.dumps(payload, indent=2)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.info(f"Wrote {config.command} result to {config.output}")
    stdout.write(text + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fock-entanglement",
        description="Separability of identical-particle states: mode bipartitions and property attribution",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--state", type=str, help="Input state file (JSON)")
    parser.add_argument("--bipartition", type=str, help='Mode split, e.g. "1,2|3,4"')
    parser.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    parser.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    parser.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--expr", type=str, help='Operator expression, e.g. "ad(1)*a(1)"')
    parser.add_argument("--format", choices=("first", "second"), help="Target representation of convert")
    parser.add_argument("-o", "--output", type=str, help="Also write the JSON result to this file")
    parser.add_argument("-M", "--num-modes", type=int, default=2)
    parser.add_argument("-N", "--num-particles", type=int, default=2)
    parser.add_argument("--statistics", choices=[s.value for s in Statistics], default="bose")
    parser.add_argument(
        "--symmetry",
        choices=[s.value for s in Symmetry],
        help="random: draw a two-particle coefficient matrix with this symmetry",
    )
    parser.add_argument("-n", "--num-of-examples", type=int, default=1)
    parser.add_argument("--batch", action="store_true", help="crosscheck: the state file holds a list")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        config = RunConfig(**vars(args))
    except ValueError as e:
        logger.error(str(e))
        return EXIT_PRECONDITION
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

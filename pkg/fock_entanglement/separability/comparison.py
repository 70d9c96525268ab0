import logging
from dataclasses import dataclass
from typing import List, Sequence

import pandas as pd
from tqdm import tqdm

from fock_entanglement.data_objects import FockVector
from fock_entanglement.separability.base_decider import BaseDecider
from fock_entanglement.separability.bipartition import ModeBipartition
from fock_entanglement.separability.verdict import SeparabilityVerdict

logger = logging.getLogger("fock-entanglement")


@dataclass
class DeciderOutcome:
    index: int
    bipartition: ModeBipartition
    first: SeparabilityVerdict
    second: SeparabilityVerdict

    @property
    def agree(self) -> bool:
        return self.first.separable == self.second.separable


class DeciderComparison:
    def __init__(self, first: BaseDecider, second: BaseDecider, verbose: bool = False):
        """
        Runs two separability deciders over the same states and collects disagreements
        :param first: e.g. RankDecider()
        :param second: e.g. CorrelationOracleDecider(max_degree=4)
        :param verbose: log every disagreement
        """
        self.first = first
        self.second = second
        self.verbose = verbose

    def compare(self, v: FockVector, bipartition: ModeBipartition, index: int = 0) -> DeciderOutcome:
        outcome = DeciderOutcome(
            index=index,
            bipartition=bipartition,
            first=self.first.decide(v, bipartition),
            second=self.second.decide(v, bipartition),
        )
        if self.verbose and not outcome.agree:
            logger.info(
                f"State {index}, bipartition {bipartition}: "
                f"{self.first.name} says {outcome.first}, {self.second.name} says {outcome.second}"
            )
        return outcome

    def compare_all(
        self, states: Sequence[FockVector], bipartitions: Sequence[ModeBipartition]
    ) -> List[DeciderOutcome]:
        if len(states) != len(bipartitions):
            raise ValueError(
                f"Got {len(states)} states but {len(bipartitions)} bipartitions"
            )
        outcomes = []
        for index, (v, bipartition) in enumerate(
            tqdm(list(zip(states, bipartitions)), desc=f"Comparing {self.first.name} and {self.second.name}")
        ):
            outcomes.append(self.compare(v, bipartition, index=index))
        disagreements = sum(not outcome.agree for outcome in outcomes)
        logger.info(f"{disagreements} disagreements out of {len(outcomes)} states")
        return outcomes

    @staticmethod
    def disagreements(outcomes: List[DeciderOutcome]) -> List[DeciderOutcome]:
        return [outcome for outcome in outcomes if not outcome.agree]

    def to_dataframe(self, outcomes: List[DeciderOutcome]) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "index": outcome.index,
                    "bipartition": str(outcome.bipartition),
                    self.first.name: outcome.first.separable,
                    self.second.name: outcome.second.separable,
                    "agree": outcome.agree,
                }
                for outcome in outcomes
            ]
        )

import logging
from abc import ABC, abstractmethod

from fock_entanglement.data_objects import DEFAULT_TOLERANCE, FockVector
from fock_entanglement.separability.bipartition import ModeBipartition
from fock_entanglement.separability.verdict import SeparabilityVerdict

logger = logging.getLogger("fock-entanglement")


class BaseDecider(ABC):
    def __init__(self, tol: float = DEFAULT_TOLERANCE, verbose: bool = False):
        """
        Abstract class for mode-separability deciders
        :param tol: decision tolerance
        :param verbose: Whether to print more debug info
        """
        if tol <= 0:
            raise ValueError(f"Tolerance must be positive, got {tol}")
        self.tol = tol
        self.verbose = verbose

    @property
    def name(self) -> str:
        return self.__class__.__name__

    @abstractmethod
    def decide(self, v: FockVector, bipartition: ModeBipartition) -> SeparabilityVerdict:
        """
        Abstract. Decides separability of a pure state
        :param v: normalized state
        :param bipartition: the mode split
        :return: verdict with certificate or witness
        """
        pass

    def report(self, verdict: SeparabilityVerdict, bipartition: ModeBipartition) -> SeparabilityVerdict:
        if self.verbose:
            logger.info(f"{self.name} on {bipartition}: {verdict}")
        return verdict

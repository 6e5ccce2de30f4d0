import logging
import os
from typing import Callable, Dict, List, Optional, TypeVar

from .exceptions import ConfigurationError, InvalidArgumentError
from .models.numeric import DEFAULT_N_Q, DEFAULT_N_Z, DEFAULT_TOLERANCE, NumericContext
from .models.report import ReportRecord
from .suites.analytic import AnalyticSuite
from .suites.associativity import AssociativitySuite
from .suites.base import Suite
from .suites.dimensions import DimensionsSuite
from .suites.identities import IdentitiesSuite
from .suites.stability import StabilitySuite

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0

SUITE_NAMES = ("identities", "stability", "associativity", "dimensions", "analytic")

T = TypeVar("T")


def _from_env(name: str, parse: Callable[[str], T]) -> Optional[T]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return parse(raw.strip())
    except ValueError as exc:
        raise ConfigurationError(f"{name}={raw!r} is not a valid value.") from exc


class Workbench:
    """
    Shared configuration for the verification suites.
    """

    def __init__(
        self,
        tolerance: Optional[float] = None,
        n_q: Optional[int] = None,
        n_z: Optional[int] = None,
        seed: Optional[int] = None,
    ):
        """
        Resolve the numeric settings.

        Args:
            tolerance: Residual tolerance. Falls back to QJACOBI_TOL, then 1e-9.
            n_q: q-series truncation. Falls back to QJACOBI_NQ, then 30.
            n_z: Laurent truncation. Falls back to QJACOBI_NZ, then 20.
            seed: Seed for random forms and sample points. Falls back to
                  QJACOBI_SEED, then 0.
        """
        self.tolerance = _first(tolerance, _from_env("QJACOBI_TOL", float), DEFAULT_TOLERANCE)
        self.n_q = _first(n_q, _from_env("QJACOBI_NQ", int), DEFAULT_N_Q)
        self.n_z = _first(n_z, _from_env("QJACOBI_NZ", int), DEFAULT_N_Z)
        self.seed = _first(seed, _from_env("QJACOBI_SEED", int), DEFAULT_SEED)
        try:
            self.context = NumericContext(
                n_q=self.n_q, n_z=self.n_z, tolerance=self.tolerance
            )
        except InvalidArgumentError as exc:
            raise ConfigurationError(str(exc)) from exc
        logger.debug(f"Workbench configured: {self.context.to_dict()} seed={self.seed}")

        self.identities = IdentitiesSuite(self)
        self.stability = StabilitySuite(self)
        self.associativity = AssociativitySuite(self)
        self.dimensions = DimensionsSuite(self)
        self.analytic = AnalyticSuite(self)

    def suites(self, name: str = "all") -> Dict[str, Suite]:
        if name == "all":
            names = list(SUITE_NAMES)
        elif name in SUITE_NAMES:
            names = [name]
        else:
            raise InvalidArgumentError(
                f"Invalid suite '{name}'. Expected one of: all, {', '.join(SUITE_NAMES)}."
            )
        return {n: getattr(self, n) for n in names}

    def verify(self, name: str = "all") -> List[ReportRecord]:
        """Run the named suite (or all of them) and return records in canonical order."""
        records: List[ReportRecord] = []
        for suite_name, suite in self.suites(name).items():
            logger.info(f"running suite {suite_name}")
            records.extend(suite.run())
        records.sort(key=lambda record: record.sort_key)
        return records


def _first(*values: Optional[T]) -> T:
    for value in values:
        if value is not None:
            return value
    raise ConfigurationError("no value available")

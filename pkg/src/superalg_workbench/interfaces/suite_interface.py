"""Suite Interface

Description:
    Defines an interface for verification suites. A suite builds the algebras and modules it needs
    for the configured characteristic, checks a group of structural claims by exact linear algebra
    and returns every outcome as a verdict of its SuiteReport. Suites are registered as
    entry-points of the group 'superalg.suites' and executed by the SuiteExecutor.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from abc import ABCMeta, abstractmethod

import numpy as np

from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport


class SuiteException(Exception):
    """Exception raised when a suite cannot carry out its checks."""


class SuiteInterface(metaclass=ABCMeta):
    @abstractmethod
    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """This method initializes the suite. All common parameters of the run are processed here.

        Args:
            run_config: configuration of the verification run (characteristic, depth, n_max).
            rng: random generator of this suite, derived from the run seed and the suite name.
        Raises:
            SuiteException: Raised on invalid parameters for this suite.
        """
        raise NotImplementedError("The '__init__'-function must be implemented in Child-Class.")

    @abstractmethod
    def run(self, **kwargs) -> SuiteReport:
        """This method is called by the SuiteExecutor to check the claims of the suite.

        A failing claim is reported as a verdict with passed=False, never raised.

        Args:
            kwargs: keyword-arguments from the 'suites' section of the run file, that are
                individual to the implemented suite.
                NOTE: We will ignore the violation the Liskov Substitution Principle (LSP) in the
                child-implementations, as it allows for more flexibility and simplicity in the code.
        Returns:
            the report with one verdict per checked claim.
        Raises:
            SuiteException: Raised when the checks cannot be carried out.
        """
        raise NotImplementedError("The 'run'-function must be implemented by the Child-Class.")

"""Prime vertex labelings for unicyclic graph families.

The library is split into

* :py:mod:`primeweave.core.numth` - exact integer helpers

* :py:mod:`primeweave.core.graph` - graph model, family constructors, unicyclic enumeration

* :py:mod:`primeweave.core.labelings` - the verifier and constructive labelers

* :py:mod:`primeweave.core.solver` - backtracking search and the conjecture scan

* :py:mod:`primeweave.core.cli` - ``prime-weave`` command line tool
"""

"""Default limits and the default family labeler table.

Every limit can be overridden from the ``limits`` section of a YAML configuration file or with command line flags.
"""

#: Largest vertex count accepted by :py:func:`primeweave.core.graph.enumeration.enumerate_unicyclic`
ENUMERATION_CAP = 10

#: Largest vertex count accepted by :py:func:`primeweave.core.solver.count.count_labelings`
COUNT_GUARD = 10

#: Search nodes one :py:func:`primeweave.core.solver.search.solve` run may expand
MAX_NODES = 10 ** 7

#: Wall clock seconds for one solver run, None means no time limit
TIME_LIMIT = None

#: Largest graph a batch family check builds
VERTEX_CAP = 200000

#: Worker processes for the conjecture scan
JOBS = 1

#: Labeler key -> dotted name of the constructive labeler. Override any of these in your configuration.
FAMILY_LABELER_DEFAULTS = {
    "path": "primeweave.core.labelings.known.label_path",
    "cycle": "primeweave.core.labelings.known.label_cycle",
    "star": "primeweave.core.labelings.known.label_star",
    "hairy3": "primeweave.core.labelings.hairy.label_hairy3",
    "hairy5": "primeweave.core.labelings.hairy.label_hairy5",
    "hairy7": "primeweave.core.labelings.hairy.label_hairy7",
    "hairy": "primeweave.core.labelings.hairy.label_hairy_blocks",
    "weed": "primeweave.core.labelings.hairy.label_bertrand_weed",
    "cps1": "primeweave.core.labelings.ternary.label_cps1",
    "cps2": "primeweave.core.labelings.ternary.label_cps2",
}

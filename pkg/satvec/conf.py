# This file may be edited by the user.
# Every value below can also be overridden with the environment variable named in its comment.

# SATVEC_SOLVER_BACKEND: "pysat" runs the solver in-process, "external" pipes DIMACS to a binary
SOLVER_BACKEND = "pysat"

# SATVEC_SOLVER_NAME: any solver name accepted by pysat.solvers.Solver
SOLVER_NAME = "glucose4"

# SATVEC_EXTERNAL_SOLVER: command line of a DIMACS solver printing "s"/"v" lines
EXTERNAL_SOLVER_COMMAND = "cryptominisat5 --verb=0"

# SATVEC_EXACTLY_ONE: "pairwise" or the name of a pysat.card.EncType
EXACTLY_ONE_ENCODING = "pairwise"

# SATVEC_CARDINALITY: pysat.card.EncType used for exactly-k groups with k > 1
CARDINALITY_ENCODING = "seqcounter"

# SATVEC_CYCLE_CAP: maximum number of simple cycles enumerated before decoding aborts
CYCLE_CAP = 100000

# Decoding budgets, in seconds
SENTENCE_BUDGET_SECONDS = 5.0
CLAUSE_BUDGET_SECONDS = 30.0

# Caps and widths used for clauses
MAX_PARENTS = 5
MAX_UNORDERED_ARITY = 5
MAX_ORDERED_ARITY = 3
PARENT_WIDTH = 4
UNORDERED_WIDTH = 4
ORDERED_WIDTH = 5

# Sentences
SEQUENCE_WIDTH = 5
SENTENCE_MAX_LENGTH = 150
SENTENCE_VOCABULARY = 20000

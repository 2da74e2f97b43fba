DEFAULT_MAX_ELEMS = 1000
DEFAULT_MAX_LEN = 12
DEFAULT_HOM_BUDGET = 10 ** 8
DEFAULT_PROBE_DEPTH = 4
DEFAULT_MAX_STATES = 64
DEFAULT_SIM_DEPTH = 2
DEFAULT_CHECK_DEPTH = 5

# largest value reported by level counts
MAX_COUNT = 2 ** 63 - 1

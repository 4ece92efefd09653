"""
Run-time configuration for tqftrep.

Plain module globals, so callers (and tests) can patch them before use.
"""
import os
import logging
from os.path import join as opjoin

storage_root = '/tmp'
results_dbname = 'tqftrep_results.db'
db_path = opjoin(storage_root, results_dbname)
results_database = 'sqlite:///' + db_path

# Catalan growth makes the diagram oracle impractical beyond this
oracle_max_strands = 12

bfs_cap = 10**5
max_word_len = 6

numeric_tolerance = 1e-9
unitary_tolerance = 1e-12

default_trials = 200
default_seed = 0


def _read_threads():
    raw = os.environ.get('TQFTREP_THREADS', '1')
    try:
        value = int(raw)
    except ValueError:
        logging.warning("Ignoring TQFTREP_THREADS=%r, not an integer" % raw)
        return 1
    return max(value, 1)


threads = _read_threads()

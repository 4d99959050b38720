"""
Chunked fan-out for exhaustive verifications.
Splits an index range into contiguous chunks and runs them on a joblib pool,
streaming results back as they finish.
"""

import logging
import sys
from typing import Callable, Iterable, Iterator, List, Sequence

from joblib import Parallel, delayed
from more_itertools import chunked
from tqdm import tqdm

logger = logging.getLogger(__name__)


def chunk_indices(total: int, chunk_size: int) -> List[List[int]]:
    """
    Args:
        total: number of indices, 0..total-1
        chunk_size: indices per chunk (at least 1)
    """
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be positive, got {chunk_size}")
    return [list(c) for c in chunked(range(total), chunk_size)]


def run_chunks(func: Callable, chunks: Sequence, *args, threads: int = 1,
               desc: str = "", progress: bool = False) -> Iterator:
    """
    Yield func(chunk, *args) for every chunk, in order.

    threads == 1 runs inline; otherwise a joblib pool with that many workers.
    Progress goes to stderr so stdout stays clean for JSON output.
    """
    if threads <= 1:
        results: Iterable = (func(chunk, *args) for chunk in chunks)
    else:
        logger.debug(f"  → {len(chunks)} chunks on {threads} workers ({desc})")
        results = Parallel(n_jobs=threads, return_as="generator")(
            delayed(func)(chunk, *args) for chunk in chunks
        )
    yield from tqdm(results, total=len(chunks), desc=desc, file=sys.stderr,
                    disable=not progress, leave=False)

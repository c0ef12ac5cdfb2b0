from vmem import virtual_memory
import sys
import queue
import threading
import time
from cbgraph import log


def get_max_memory_mb(minimum=100, use_at_most=0.5):
    """
    :param minimum minimum value to return (return value will never be lower than this)
    :param use_at_most use at most this fraction of the available memory. 0.5 = use at most 50% of available memory
    :return value of memory to use in megabytes.
    """
    return max(minimum, (virtual_memory().available / 1024 / 1024) * use_at_most)


def distance_table_fits(n, itemsize=4):
    """
    Whether an n x n distance table fits in the memory budget.
    Logs a warning when it does not; the caller still proceeds.
    """
    needed_mb = float(n) * n * itemsize / 1024 / 1024
    budget_mb = get_max_memory_mb()
    if needed_mb > budget_mb:
        log.CB_WARNING("Distance table for %s vertices needs ~%.0f MB, more than the %.0f MB budget" % (n, needed_mb, budget_mb))
        return False
    return True


def parallel_map(func, items, max_workers=1, single_thread_fallback=True):
    """
    Thread pool map which handles gracefully CTRL+C and reverts to
    single thread processing in case of errors.
    :param func function to execute on each object
    :param items list of objects
    :return list of results, in the same order as items
    """
    items = list(items)
    results = [None] * len(items)
    errors = []

    def process_one(num, q):
        results[num] = func(q)

    def worker():
        while True:
            (num, q) = pq.get()
            if num < 0:
                pq.task_done()
                break
            if errors:
                # drain the queue
                pq.task_done()
                continue

            try:
                process_one(num, q)
            except Exception as e:
                errors.append(e)
            finally:
                pq.task_done()

    if max_workers > 1 and len(items) > 1:
        use_single_thread = False
        pq = queue.PriorityQueue()
        threads = []
        for i in range(min(max_workers, len(items))):
            t = threading.Thread(target=worker)
            t.start()
            threads.append(t)

        for num, q in enumerate(items):
            pq.put((num, q))

        def stop_workers():
            for i in range(len(threads)):
                pq.put((-1, None))
            for t in threads:
                t.join()

        # block until all tasks are done
        try:
            while pq.unfinished_tasks > 0:
                time.sleep(0.01)
        except KeyboardInterrupt:
            print("CTRL+C terminating...")
            stop_workers()
            sys.exit(1)

        stop_workers()

        if errors:
            if single_thread_fallback:
                log.CB_WARNING("Failed to run in parallel (%s), retrying with a single thread..." % str(errors[0]))
                use_single_thread = True
            else:
                raise errors[0]
    else:
        use_single_thread = True

    if use_single_thread:
        for num, q in enumerate(items):
            process_one(num, q)

    return results


def first_witness(func, items, max_workers=1):
    """
    Returns the first non-None result of func over items in item order,
    independent of scheduling. Items are evaluated in chunks so a
    failing scan stops early.
    """
    items = list(items)
    if max_workers <= 1:
        for q in items:
            r = func(q)
            if r is not None:
                return r
        return None

    chunk = max_workers * 4
    for start in range(0, len(items), chunk):
        for r in parallel_map(func, items[start:start + chunk], max_workers):
            if r is not None:
                return r
    return None

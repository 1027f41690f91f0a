import threading

import pytest

from engine.pool import WorkStealingPool


def test_every_task_runs_exactly_once():
    pool = WorkStealingPool(4, poll_seconds=0.001)
    seen = []
    lock = threading.Lock()

    def record(i):
        with lock:
            seen.append(i)

    for i in range(200):
        pool.submit(lambda i=i: record(i))
    pool.run()
    assert sorted(seen) == list(range(200))
    assert pool.executed == 200


def test_tasks_spawned_by_workers_are_executed():
    pool = WorkStealingPool(3, poll_seconds=0.001)
    leaves = []
    lock = threading.Lock()

    def split(depth):
        if depth == 0:
            with lock:
                leaves.append(pool.worker_index())
            return
        pool.submit(lambda: split(depth - 1))
        pool.submit(lambda: split(depth - 1))

    pool.submit(lambda: split(6))
    pool.run()
    assert len(leaves) == 64
    assert all(0 <= w < 3 for w in leaves)
    assert pool.executed == 127


def test_first_error_is_reraised():
    pool = WorkStealingPool(2, poll_seconds=0.001)

    def boom():
        raise RuntimeError("boom")

    pool.submit(boom)
    for _ in range(10):
        pool.submit(lambda: None)
    with pytest.raises(RuntimeError, match="boom"):
        pool.run()


def test_worker_index_outside_the_pool():
    assert WorkStealingPool(2).worker_index() == 0
    with pytest.raises(ValueError):
        WorkStealingPool(0)


def test_empty_pool_returns_immediately():
    pool = WorkStealingPool(4)
    pool.run()
    assert pool.executed == 0

# Copyright 2024 The prational Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

import os
from queue import Queue
from threading import Thread, Lock, Event

from .progress_bar import ProgressBar


__all__ = ['work_provider', 'map_ordered', 'thread_count']


class _Failure:
    def __init__(self, error):
        self.error = error


def work_provider(items, processor, worker_count=1, queue_size=64, report_progress=False):
    """ Return an object that produces ``(index, result)`` pairs for every entry of :attr:`items`

    Items are handed out one at a time to :attr:`worker_count` daemon threads which run :attr:`processor` on them and
    push the results into a bounded queue.

    Note:
        Pairs arrive in completion order. Use :func:`map_ordered` when the input order matters. An exception raised by
        :attr:`processor` is re-raised by the iterator at the position of the failed item.

    Args:
        items (list): Work items.
        processor (Callable[[Any], Any]): Function applied to every item.
        worker_count (int, optional): Number of threads, at least one. Defaults to one.
        queue_size (int, optional): Maximum number of finished results waiting to be consumed. Defaults to 64.
        report_progress (bool, optional): Draw a :class:`~prational.progress_bar.ProgressBar` on stderr.
            Defaults to False.

    Returns:
        Iterator: yields ``(index, result)``.

    Example:

        ::

            for i, verdict in work_provider(primes, lambda p: verdict(K, p, record, unit), worker_count=4):
                cells[i] = verdict
    """
    class State:
        def __init__(self):
            self.current_item = 0
            self.lock = Lock()
            self.item_count = len(items)
            self.quit_event = Event()
            self.queue = Queue(queue_size)
            self.consumed_count = 0
            self.progress_bar = None
            if report_progress and self.item_count:
                self.progress_bar = ProgressBar(self.item_count)

        def get_next_item_index(self):
            with self.lock:
                if self.quit_event.is_set() or self.current_item == self.item_count:
                    raise StopIteration
                index = self.current_item
                self.current_item += 1
                return index

        def all_done(self):
            return self.consumed_count == self.item_count

    def _worker(state):
        while not state.quit_event.is_set():
            try:
                index = state.get_next_item_index()
            except StopIteration:
                break
            try:
                result = processor(items[index])
            except Exception as e:
                result = _Failure(e)
            state.queue.put((index, result))

    class Iterator:
        def __init__(self):
            self.state = State()

            self.workers = []
            for i in range(max(1, worker_count)):
                worker = Thread(target=_worker, args=(self.state, ))
                worker.daemon = True
                worker.start()
                self.workers.append(worker)

        def __len__(self):
            return self.state.item_count

        def __iter__(self):
            return self

        def __next__(self):
            if self.state.quit_event.is_set() or self.state.all_done():
                self.state.quit_event.set()
                raise StopIteration
            index, result = self.state.queue.get()
            self.state.queue.task_done()
            self.state.consumed_count += 1
            if self.state.progress_bar is not None:
                self.state.progress_bar.increment()
            if isinstance(result, _Failure):
                self.close()
                raise result.error
            return index, result

        def close(self):
            self.state.quit_event.set()
            while not self.state.queue.empty():
                self.state.queue.get(False)
                self.state.queue.task_done()

        def __del__(self):
            self.close()
            for worker in self.workers:
                # a worker blocked on a full queue is woken by the drain above
                worker.join(timeout=1.0)

    return Iterator()


def map_ordered(processor, items, worker_count=1, report_progress=False):
    """Runs :func:`work_provider` to completion and returns the results in input order."""
    items = list(items)
    if worker_count <= 1 and not report_progress:
        return [processor(x) for x in items]
    results = [None] * len(items)
    for index, result in work_provider(items, processor, worker_count, report_progress=report_progress):
        results[index] = result
    return results


def thread_count(cfg):
    """``cfg.THREADS`` capped by the ``PRAT_THREADS`` environment variable."""
    count = max(1, int(cfg.THREADS))
    cap = os.environ.get('PRAT_THREADS')
    if cap:
        try:
            count = min(count, max(1, int(cap)))
        except ValueError:
            pass
    return count

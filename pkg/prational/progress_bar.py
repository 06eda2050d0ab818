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
import sys
import time


class ProgressBar:
    """Text progress bar on stderr, redrawn at most every 0.3 s and always on the last item."""
    def __init__(self, total_items, prefix='Progress:', suffix='', fill='#', length=None, stream=None):
        self.format_string = "\r%s |%%s| %%5.1f%%%% [%%d/%d] %s" % (prefix, total_items, suffix)
        self.total_items = max(1, total_items)
        self.fill = fill
        self.done = 0
        self.stream = sys.stderr if stream is None else stream
        self.last_print = -1.0
        self.min_print_interval = 0.3
        if length is None:
            try:
                columns = os.get_terminal_size().columns
            except (AttributeError, OSError):
                columns = 80
            length = max(10, columns - len(self._status('', 100.0)) - 1)
        self.length = length

    def _status(self, bar, percent):
        return self.format_string % (bar, percent, self.done)

    def increment(self, count=1):
        self.done += count
        now = time.time()
        finished = self.done >= self.total_items
        if now - self.last_print < self.min_print_interval and not finished:
            return
        self.last_print = now
        filled = min(self.length, self.length * self.done // self.total_items)
        bar = self.fill * filled + '-' * (self.length - filled)
        self.stream.write(self._status(bar, 100.0 * self.done / self.total_items))
        if finished:
            self.stream.write('\n')
        self.stream.flush()

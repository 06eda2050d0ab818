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
"""Profiling utils"""

import functools
import logging
import time


logger = logging.getLogger("prational")


def timer(f):
    """ Decorator logging the execution time of a scan.

    After return the ``prational`` logger receives, at debug level: ``func:<function name>  took: <seconds> sec``.

    Args:
        f (Callable[Any]): function to decorate.

    Returns:
        Callable[Any]: Decorated function.

    Example:

        ::

            >>> import logging
            >>> logging.basicConfig(level=logging.DEBUG)
            >>> from prational.timer import timer
            >>> @timer
            ... def scan(n):
            ...     return sum(range(n))
            ...
            >>> scan(100000)
            DEBUG:prational:func:'scan'  took: 0.0021 sec
            4999950000

    """
    @functools.wraps(f)
    def __wrapper(*args, **kw):
        time_start = time.time()
        result = f(*args, **kw)
        logger.debug('func:%r  took: %2.4f sec', f.__name__, time.time() - time_start)
        return result
    return __wrapper

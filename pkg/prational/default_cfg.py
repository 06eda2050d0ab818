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

from yacs.config import CfgNode as CN


__all__ = ['get_default_cfg']


_C = CN()

_C.OUTPUT_DIR = "results"
_C.WRITE_LOG = False
_C.THREADS = 1
_C.PROGRESS = False

_C.ENGINE = CN()
# starting p-adic precision of the log index and the largest one tried
_C.ENGINE.LOG_PRECISION = 2
_C.ENGINE.LOG_PRECISION_CAP = 16

_C.TABLE = CN()
_C.TABLE.PMIN = 5
_C.TABLE.PMAX = 100
_C.TABLE.FORMAT = 'text'

_C.SCAN = CN()
_C.SCAN.PMIN = 5
_C.SCAN.XMAX = 100

_C.PURE_CUBIC = CN()
_C.PURE_CUBIC.PMIN = 5
_C.PURE_CUBIC.PMAX = 499
# empty: the bundled pure_cubic_h.csv
_C.PURE_CUBIC.H_DATA = ''

_C.GGC = CN()
_C.GGC.XMAX = 1000
_C.GGC.T = 1.0
_C.GGC.XMAX_CAP = 10000000
_C.GGC.DATA = ''

_C.RECURRENCE = CN()
_C.RECURRENCE.PMAX = 300

_C.SELFTEST = CN()
_C.SELFTEST.SEED = 20240229
_C.SELFTEST.SCALE = 1.0


def get_default_cfg():
    return _C.clone()

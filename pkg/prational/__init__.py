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

from prational.errors import *
from prational.ring import IntPoly, ModPoly, PadicApprox, factor_mod_p, hensel_lift_root, padic_log
from prational.numberfield import FieldElement, NumberField, PrimeFactor, IdealHNF, UnitData, make_field, make_unit
from prational.numberfield import split_prime, pow_mod
from prational.torsion import applicability_guard, condition2
from prational.rationality import Status, Verdict, condition1, log_index_split_cyclic, verdict
from prational.recurrence import RecurrenceSpec, screen, cross_check
from prational.records import FieldRecord, load_records, write_records, build_field
from prational.harness import reproduce_table, density_scan
from prational.families import pure_cubic_scan, ggc_scan
from prational.default_cfg import *
from prational.tracker import *
from prational import timer

__version__ = '0.1.0'

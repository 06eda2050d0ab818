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

import csv
import os
from collections import OrderedDict

import numpy as np
import yacs.config


__all__ = ['DensityTracker']


class DensityTracker:
    """Running count of p-rational and undetermined primes of one field, sampled at every prime x."""
    def __init__(self, output_dir='.'):
        self.output_dir = output_dir.OUTPUT_DIR if isinstance(output_dir, yacs.config.CfgNode) else output_dir
        self.tracks = OrderedDict([('count', []), ('undetermined', []), ('ratio', [])])
        self.xs = []

    def update(self, x, count, undetermined):
        if self.xs and x <= self.xs[-1]:
            raise ValueError('samples must be taken at increasing x, got %d after %d' % (x, self.xs[-1]))
        self.xs.append(x)
        self.tracks['count'].append(count)
        self.tracks['undetermined'].append(undetermined)
        self.tracks['ratio'].append(float(count / np.log(x)))

    def write(self, name='density.csv'):
        os.makedirs(self.output_dir, exist_ok=True)
        path = os.path.join(self.output_dir, name)
        with open(path, mode='w', newline='') as csv_file:
            writer = csv.writer(csv_file, delimiter=',', quotechar='"', quoting=csv.QUOTE_MINIMAL)
            writer.writerow(['x'] + list(self.tracks.keys()))
            for i, x in enumerate(self.xs):
                writer.writerow([x] + ['%.6f' % v if isinstance(v, float) else v
                                       for v in (self.tracks[k][i] for k in self.tracks)])
        return path

    def __str__(self):
        if not self.xs:
            return 'no samples'
        return 'x: %d, count: %d, undetermined: %d, ratio: %.4f' % (
            self.xs[-1], self.tracks['count'][-1], self.tracks['undetermined'][-1], self.tracks['ratio'][-1])

    def state_dict(self):
        return {'xs': list(self.xs), 'tracks': {k: list(v) for k, v in self.tracks.items()}}

    def load_state_dict(self, state_dict):
        self.xs = list(state_dict['xs'])
        for key in self.tracks:
            self.tracks[key] = list(state_dict['tracks'][key])

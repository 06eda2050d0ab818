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


class Registry(dict):
    """Name to callable map filled by the :meth:`register` decorator; holds CLI commands and self-test suites."""
    def __init__(self, kind, *args, **kwargs):
        super(Registry, self).__init__(*args, **kwargs)
        self.kind = kind

    def register(self, name):
        def register_fn(fn):
            assert name not in self, '%s %r registered twice' % (self.kind, name)
            self[name] = fn
            return fn
        return register_fn

    def __missing__(self, name):
        raise KeyError('unknown %s %r, expected one of: %s' % (self.kind, name, ', '.join(sorted(self))))

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
"""Exceptions raised by the engine"""


__all__ = ['PrationalError', 'DomainError', 'NotSimpleRootError', 'UnsupportedError', 'SplittingUndetermined',
           'PrecisionError', 'RecordError', 'InvariantViolation']


class PrationalError(Exception):
    """Base class of every error raised by :mod:`prational`."""


class DomainError(PrationalError, ValueError):
    """An operation was called outside of its domain (degree, primality, shape of the input)."""


class NotSimpleRootError(DomainError):
    """Hensel lifting was asked to lift a root where the derivative vanishes mod p."""


class UnsupportedError(PrationalError, NotImplementedError):
    """The request is well formed but deliberately not handled (p = 2 logarithms, non-power bases)."""


class SplittingUndetermined(PrationalError):
    """p may divide the index of Z[alpha] and no certificate allows reading the splitting off f mod p."""


class PrecisionError(PrationalError, ArithmeticError):
    """A p-adic quantity could not be decided at the largest allowed precision."""


class RecordError(PrationalError, ValueError):
    """Malformed input data.

    Args:
        message (str): What is wrong.
        path (str, optional): File the record came from.
        line (int, optional): 1-based line number inside :attr:`path`.
    """
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        if path is not None and line is not None:
            message = '%s:%d: %s' % (path, line, message)
        elif path is not None:
            message = '%s: %s' % (path, message)
        super(RecordError, self).__init__(message)


class InvariantViolation(PrationalError, AssertionError):
    """A property that must always hold was found broken. Always a bug or corrupted data."""

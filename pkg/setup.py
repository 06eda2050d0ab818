#
# Copyright 2024 The prational Authors. All rights reserved.
# License: Apache License, Version 2.0, see LICENSE.txt
#

from setuptools import setup

from codecs import open
import os

here = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='prational',

    version='0.1.0',

    description='prational - p-rationality of complex cubic and totally imaginary quartic number fields.',
    long_description=long_description,

    license='Apache-2.0',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    keywords='number-theory p-rational iwasawa algebraic-number-fields',

    packages=['prational'],
    package_data={'prational': ['data/*.csv']},
    python_requires='>=3.8',
    install_requires=['sympy>=1.13', 'numpy', 'yacs'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['prational=prational.cli:main']},
)

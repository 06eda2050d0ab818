# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('../../'))

import prational


project = 'prational'
copyright = '2024, The prational Authors'
author = 'The prational Authors'

version = prational.__version__
release = prational.__version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

# Google style docstrings with typed Args sections
napoleon_use_ivar = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'prationaldoc'

latex_documents = [
    (master_doc, 'prational.tex', 'prational Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'prational', 'prational Documentation', [author], 1)
]

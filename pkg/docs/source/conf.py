# -*- coding: utf-8 -*-
#
# primeweave.core documentation build configuration file.

import sys
import os

# Make the package importable without installing it
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'primeweave.core'
copyright = '2026 primeweave authors'

version = '0.1'
release = '0.1'

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'default'
html_title = "primeweave.core - prime vertex labelings for unicyclic graphs"
html_static_path = []
htmlhelp_basename = 'primeweavecoredoc'

man_pages = [
    ('index', 'primeweavecore', 'primeweave.core Documentation',
     ['primeweave authors'], 1)
]

autoclass_content = 'both'
autodoc_member_order = "bysource"

# Build API docs without the test dependencies installed
from unittest.mock import MagicMock


class Mock(MagicMock):
    @classmethod
    def __getattr__(cls, name):
            return Mock()

MOCK_MODULES = ['pytest', 'hypothesis', 'hypothesis.strategies']
sys.modules.update((mod_name, Mock()) for mod_name in MOCK_MODULES)

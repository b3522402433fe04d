# Sphinx configuration for the nonforesty documentation.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

project = 'nonforesty'
copyright = '2026, the nonforesty developers'
author = 'the nonforesty developers'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
]

## Third-party packages need not be installed to build the documentation
autodoc_mock_imports = ["tqdm", "networkx"]
autodoc_member_order = "bysource"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable", None),
}

master_doc = "index"
exclude_patterns = []

html_theme = 'alabaster'

# Sphinx configuration for the pygoldie documentation.

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

project = "pygoldie"
copyright = "2026, pygoldie developers"
author = "pygoldie developers"
release = "0.1.0"

add_module_names = False

# napoleon reads the Google style Args/Returns sections
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",
    "m2r2",
]
source_suffix = [".rst", ".md"]

autodoc_member_order = "bysource"
doctest_global_setup = "import pygoldie as pg"

templates_path = ["_templates"]
exclude_patterns = []

html_title = f"{project} {release}"
html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]

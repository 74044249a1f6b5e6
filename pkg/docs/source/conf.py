# -*- coding: utf-8 -*-
#
# planeforge documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..', 'src')))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'planeforge'
copyright = 'planeforge developers'
author = 'planeforge developers'

version = '0.1'
release = '0.1.dev0'

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# numpydoc sections through napoleon
napoleon_google_docstring = False
napoleon_numpy_docstring = True

import sphinx_rtd_theme
html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
htmlhelp_basename = 'planeforgedoc'

latex_documents = [
  (master_doc, 'planeforge.tex', 'planeforge Documentation',
   author, 'manual'),
]

man_pages = [
    (master_doc, 'planeforge', 'planeforge Documentation',
     [author], 1)
]

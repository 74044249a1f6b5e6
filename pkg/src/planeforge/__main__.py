# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.
"""
from planeforge.cli import main

main()

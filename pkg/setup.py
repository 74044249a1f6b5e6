#!/usr/bin/env python
# coding: utf-8

import io
from setuptools import setup, find_packages


setup(
    name="planeforge",
    version="0.1.dev0",
    description="Blocking sets in finite projective and affine planes",
    author="planeforge developers",
    license="MIT",
    keywords=[
      "finite geometry", "projective plane", "blocking set", "semioval",
      "galois field", "combinatorial search",
    ],
    python_requires=">=3.10",
    install_requires=[
        "numpy>=2.0",
        "pandas",
        "tqdm",
        "click"
    ],
    tests_require=[
        "pytest",
        "galois"
    ],
    packages=find_packages('src'),
    package_dir={'': 'src'},
    entry_points={
        "console_scripts": ["planeforge=planeforge.cli:main"],
    },
    classifiers=[
      "Development Status :: 2 - Pre-Alpha",
      "Intended Audience :: Education",
      "Intended Audience :: Science/Research",
      "License :: OSI Approved :: MIT License",
      "Operating System :: OS Independent",
      "Programming Language :: Python",
      "Programming Language :: Python :: 3",
      "Programming Language :: Python :: 3.10",
      "Programming Language :: Python :: Implementation :: CPython",
      "Topic :: Scientific/Engineering",
      "Topic :: Scientific/Engineering :: Mathematics",
    ],
    long_description=io.open('README.rst', encoding='utf-8').read(),
    include_package_data=True,
    zip_safe=False,
)

# -*- coding: utf-8 -*-
"""setup.py"""

from setuptools import setup


def read_content(filepath):
    with open(filepath) as fobj:
        return fobj.read()


classifiers = [
    "Development Status :: 3 - Alpha",
    "Intended Audience :: Science/Research",
    "License :: OSI Approved :: MIT License",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Programming Language :: Python",
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: Implementation :: CPython",
]


long_description = (
    read_content("README.md")
)

requires = [
    'setuptools',
    'crcmod',
    'sympy',
    'networkx',
]

extras_require = {
    }

setup(name='knotoid',
      version='0.1.0',
      description='Knotoid diagrams on the sphere: invariants, moves, operations and heights',
      long_description=long_description,
      long_description_content_type="text/markdown",
      classifiers=classifiers,
      packages=['knotoid', 'knotoid.tests'],
      package_data={'knotoid': ['fixtures/*.json']},
      data_files=[],
      install_requires=requires,
      include_package_data=True,
      extras_require=extras_require,
      entry_points={
          'console_scripts': ['knotoid=knotoid.cli:main'],
      },
)

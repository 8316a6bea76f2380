#!/usr/bin/env python
import pathlib
from setuptools import setup, find_packages
from stressshield import __version__
PKG_NAME = 'stress-shield'
VERSION = __version__

# The directory containing this file
HERE = pathlib.Path(__file__).parent
# The text of the README file
with open(HERE / "README.rst") as fh:
    README = fh.read()

setup(
    name=PKG_NAME,
    version=VERSION,
    python_requires='>=3.8.0',
    packages=find_packages(exclude=['env', 'env.*', 'examples', 'examples.*', "*.tests", "*.tests.*", "tests.*", "tests", "*.tmp", "*.tmp.*", "tmp.*", "tmp"]),
    package_data={'stressshield': ['VERSION', 'cfg/config.json']},
    license="mit",
    install_requires=[
        'numpy>=1.21.0',
    ],
    extras_require={
        'dev': ['pytest>=7.1.2', 'hypothesis>=6.48.1'],
        'docs': ['sphinx>=4.5.0', 'sphinx-rtd-theme', 'sphinx-autodoc-typehints', 'sphinx-toolbox'],
    },
    entry_points={
        'console_scripts': ['stress-shield=stressshield.cli.main:main'],
    },
    keywords=['maxwell stress', 'electric field', 'stress reduction', 'kkt', 'monte carlo'],
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    description="Optimal electric field for reducing total stress",
    long_description_content_type="text/x-rst",
    long_description=README
)

# -*- coding: utf-8 -*-

"""Setup separable entire solutions library."""

import os
import sys

from setuptools import find_packages, setup

if sys.version_info < (3, 8):
    raise RuntimeError(
        "sepsol requires Python>=3.8, " "but your Python is {}".format(sys.version)
    )

requirements = {
    "install": [
        "wheel",
        "setuptools>=38.5.1",
        "numpy>=1.20",
        "scipy>=1.6",
        "tqdm>=4.26.1",
        "joblib>=1.0",
        "hydra-core>=1.2",
        "omegaconf>=2.2",
    ],
    "setup": [
        "numpy",
        "pytest-runner",
    ],
    "test": [
        "pytest>=7.0",
        "hypothesis>=6.0",
    ],
}
entry_points = {
    "console_scripts": [
        "sepsol-list=sepsol.bin.list_catalog:main",
        "sepsol-sample=sepsol.bin.sample:main",
        "sepsol-verify=sepsol.bin.verify:main",
        "sepsol-counterexample=sepsol.bin.counterexample:main",
    ]
}

install_requires = requirements["install"]
setup_requires = requirements["setup"]
tests_require = requirements["test"]
extras_require = {
    k: v for k, v in requirements.items() if k not in ["install", "setup"]
}

dirname = os.path.dirname(__file__)
setup(
    name="sepsol",
    version="0.1.0",
    description="Separable entire solutions of quasilinear elliptic equations and their verification",
    long_description_content_type="text/markdown",
    long_description=open(os.path.join(dirname, "README.md"), encoding="utf-8").read(),
    license="MIT License",
    packages=find_packages(include=["sepsol*"]),
    package_data={"sepsol.bin": ["config/*.yaml", "config/*/*.yaml"]},
    include_package_data=True,
    install_requires=install_requires,
    setup_requires=setup_requires,
    tests_require=tests_require,
    extras_require=extras_require,
    entry_points=entry_points,
    classifiers=[
        "Programming Language :: Python :: 3",
        "Intended Audience :: Science/Research",
        "Operating System :: POSIX :: Linux",
        "License :: OSI Approved :: MIT License",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)

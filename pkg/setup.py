# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

from setuptools import find_packages, setup

import versioneer

description = (
    "Spectra, energies, topological indices and generalized entropies of "
    "small graphs, with a verifier for the identities between them."
)

setup(
    name="graphent",
    version=versioneer.get_version(),
    cmdclass=versioneer.get_cmdclass(),
    license="BSD-3-Clause",
    packages=find_packages(),
    author="graphent development team",
    description=description,
    url="https://example.com",
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "scipy",
        "pandas",
        "click",
    ],
    extras_require={
        "test": ["pytest", "hypothesis", "networkx", "scikit-bio"],
    },
    entry_points={
        "qiime2.plugins": [
            "graphent="
            "graphent"
            ".plugin_setup:plugin"],
        "console_scripts": [
            "graphent=graphent.cli:cli"],
    },
    package_data={
        "graphent": ["citations.bib"],
        "graphent.tests": ["data/*"],
    },
    zip_safe=False,
)

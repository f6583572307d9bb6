"""Build package."""

import os

from setuptools import find_namespace_packages, setup

DESCRIPTION = "Exact-arithmetic workbench for Hom-Hopf algebras, Hom-Yetter-Drinfeld modules and Radford biproducts"
EXCLUDE_FROM_PACKAGES = ["build", "dist", "test", "test.*", "examples", "examples.*", "*~"]

setup(
    name="homyd",
    author="wambua",
    author_email="swskye17@gmail.com",
    version=open(os.path.abspath("version.txt")).read().strip(),
    packages=find_namespace_packages(include=["homyd", "homyd.*"], exclude=EXCLUDE_FROM_PACKAGES),
    description=DESCRIPTION,
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    entry_points={
        "console_scripts": [
            "homyd=homyd:main",
        ],
    },
    python_requires=">=3.8",
    install_requires=[
        "colorama",
        "rich",
        "sympy",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    include_package_data=True,
    zip_safe=False,
    license="GNU v3",
    keywords=[
        "hom-hopf-algebra",
        "yetter-drinfeld",
        "radford-biproduct",
        "quasitriangular",
        "exact-arithmetic",
        "algebra",
    ],
    classifiers=[
        "Environment :: Console",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)

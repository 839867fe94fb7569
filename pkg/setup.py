import setuptools

from pathlib import Path


# Extract information from the README file and embed it in the package.
readme_path = Path(__file__).absolute().parent / "README.md"
with open(readme_path, "r", encoding="utf-8") as fh:
    long_description = fh.read()

# Single source of the version number.
version = {}
with open(Path(__file__).absolute().parent / "fuzzy_lattice" / "_version.py", "r") as fh:
    exec(fh.read(), version)

setuptools.setup(
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Development Status :: 3 - Alpha",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description="Exact lattices of fuzzy, interval-valued, set-valued and type-2 fuzzy sets with law checking",
    entry_points={
        "console_scripts": [
            "fuzzy-lattice = fuzzy_lattice.cli:main",
        ],
    },
    extras_require={
        "tests": [
            "hypothesis",
            "pytest",
            "pytest-cov",
        ],
    },
    install_requires=[
        "fsspec",
        "lxml",
        "numpy",
    ],
    long_description=long_description,
    long_description_content_type="text/markdown",
    name="fuzzy_lattice",
    packages=setuptools.find_packages(exclude=["tests"]),
    python_requires=">=3.8",
    version=version["__version__"],
)

from setuptools import setup, find_packages
import os.path

# read the contents of the README file
from os import path

this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

with open(os.path.join(this_directory, "VERSION")) as version_file:
    __version__ = version_file.read().strip()

setup(
    name="fock-entanglement",
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=__version__,
    packages=find_packages(exclude=["tests", "tests.*"]),
    license="MIT",
    description="Fock-space operator algebra and separability deciders for identical-particle states",
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20.2",
        "scipy>=1.6.0",
        "pandas",
        "tqdm>=4.32.1",
        "pytest>=4.6.2",
    ],
    entry_points={
        "console_scripts": ["fock-entanglement=fock_entanglement.cli:main"],
    },
)

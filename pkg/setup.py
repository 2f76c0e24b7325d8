"""Setup script for survnet."""

from setuptools import setup, find_packages


def readme():
    """Loads the readme file for survnet."""
    with open("README.md", "r") as inf:
        return inf.read()


setup(
    name="survnet",
    version="0.1.0",
    description="Synthesis and verification of k-connected survivable network topologies.",
    long_description=readme(),
    long_description_content_type="text/markdown; charset=UTF-8; variant=GFM",
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Topic :: System :: Networking",
        "Programming Language :: Python :: 3",
    ],
    packages=find_packages("src"),
    package_dir={"": "src"},
    include_package_data=True,
    package_data={"survnet": ["datafiles/*.json", "datafiles/*.csv"]},
    install_requires=["networkx>=3.1", "numpy>=1.22"],
    entry_points={"console_scripts": ["survnet = survnet.cli:run"]},
    zip_safe=False,
)

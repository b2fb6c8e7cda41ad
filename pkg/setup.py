from setuptools import setup, find_packages

setup(
    name="grasscluster",
    version="0.1",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "networkx",
        "numpy",
        "sympy",
    ],
    extras_require={
        "test": [
            "pytest",
            "hypothesis",
        ],
    },
    entry_points={
        "console_scripts": [
            "grasscluster=grasscluster.cli:main",
        ],
    },
)

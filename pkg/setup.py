from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="milnor_lib",
    version="0.1.0",
    author="Rufus Pearce",
    author_email="rufuspearce1@gmail.com",
    description="Exact linking numbers and Milnor mu-bar invariants of link diagrams, with a local move engine",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/yourusername/milnor_lib",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    package_data={
        'milnor_lib.fixtures': ['*.pd'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.7",
    install_requires=[
        "numpy",
    ],
    extras_require={
        'dev': ['pytest>=7.0.0', 'hypothesis>=6.0.0', 'flake8>=3.8.0'],
    },
    entry_points={
        'console_scripts': [
            'milnor-links=milnor_lib.cli.main:main',
        ],
    },
)

import setuptools

setuptools.setup(
    name="nonforesty",
    version="1.0.0",
    description="Minimum sizes of k-connected locally nonforesty graphs: formulas, constructions and exhaustive certificates.",
    packages=setuptools.find_packages(exclude=("tests", "tests.*")),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=[
        "networkx",
        "tqdm",
    ],
    extras_require={
        "test": ["pytest"],
    },
    entry_points={
        "console_scripts": ["nonforesty=nonforesty.cli:main"],
    },
)

import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="hausdorff",
    version="0.1.0",
    description="Complete monotonicity and complete alternation of rational sequences and nets",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
      "torch",
      "pyparsing>=2.4,<3"
    ],
    extras_require={"test": ["pytest", "hypothesis"]},
    packages=setuptools.find_packages(exclude=("test",)),
    entry_points={"console_scripts": ["hausdorff = hausdorff.cli.main:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
)

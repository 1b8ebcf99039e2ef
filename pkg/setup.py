import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="subcubic-matching-bounds",
    version="1.0.0",
    author="Subcubic Matching Bounds Developers",
    description="Exact verification of linear lower bounds on the matching "
                "number of subcubic graphs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["subcubic_matching"],
    scripts=["subcubic_verify.py"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.6',
    install_requires=[
        "Jinja2",
        "jsonschema",
        "lark-parser",
        "PyYAML>=5.1",
        "sympy"
    ],
    extras_require={
        "test": [
            "hypothesis",
            "mock",
            "networkx",
            "pytest"
        ]
    }
)

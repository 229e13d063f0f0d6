import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="sarcverify",
    version="0.1.0",
    author="sarcverify developers",
    description="Exact check of s-arc-transitivity for actions of alternating and symmetric groups "
                "on cosets of maximal subgroups",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    package_dir={"": "src"},
    packages=setuptools.find_packages(where="src"),
    package_data={"sarcverify": ["data/*.json"]},
    install_requires=["numpy", "pandas", "scipy", "joblib", "sympy", "typing_extensions"],
    entry_points={"console_scripts": ["sarcverify = sarcverify.cli:main"]},
    python_requires=">=3.8",
)

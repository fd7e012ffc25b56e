import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="specfac",
    version="0.1.0",
    description="Spectral and size conditions for {P2, C3, P5, T3}-factors of graphs.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "profile"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "scipy",
        "networkx",
        "click",
        "joblib",
        "progressbar",
    ],
    entry_points={"console_scripts": ["specfac = specfac.cli:main"]},
    include_package_data=True,
)

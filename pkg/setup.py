from setuptools import setup, find_packages

setup(
    name="instkit",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "graphviz==0.20.3",
        "pandas==2.2.3",
        "numpy==2.2.3",
        "json5==0.10.0",
    ],
    entry_points={"console_scripts": ["instkit=src.instkit:main"]},
)

from setuptools import setup, find_packages

setup(
    name="rankmac",
    version="0.1.0",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "pandas>=2.0.0",
        "numpy>=1.24.0",
        "typer>=0.9.0",
        "tqdm>=4.66.0",
        "galois>=0.3.8",
        "pydantic>=2.5.0",
        "pydantic-settings>=2.1.0",
        "python-json-logger>=2.0.7",
    ],
    entry_points={
        "console_scripts": [
            "rankmac=src.cli:main",
        ],
    },
    python_requires=">=3.9",
)

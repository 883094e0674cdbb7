#!/usr/bin/env python3
"""
cutnumber - Exact certificates for cut numbers of 3-manifold groups
"""

from setuptools import find_packages, setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="cutnumber",
    version="0.1.0",
    author="cutnumber developers",
    description="Exact certificates for cut numbers of 3-manifold groups and corank obstructions",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["cutnumber", "cutnumber.*"]),
    include_package_data=True,
    package_data={
        "cutnumber": [
            "configs/presentations/*.txt",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "colorlog>=6.7.0",
        "pydantic>=2.0.0",
        "python-dotenv>=1.0.0",
        "tqdm>=4.65.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "sympy>=1.12",
            "black>=23.0.0",
            "isort>=5.12.0",
            "mypy>=1.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "cutnumber=cutnumber.cli.main:main",
        ],
    },
)

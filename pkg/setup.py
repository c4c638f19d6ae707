#!/usr/bin/env python3
"""
psycholex 语料分析工具 - 安装脚本
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.split("#")[0].strip() for line in fh
                    if line.strip() and not line.startswith("#")]

# 开发与测试依赖不装进运行环境
DEV_PACKAGES = ("pytest", "pytest-cov", "black", "flake8", "mypy")
install_requires = [r for r in requirements if not r.startswith(DEV_PACKAGES)]
dev_requires = [r for r in requirements if r.startswith(DEV_PACKAGES)]

setup(
    name="psycholex",
    version="1.0.0",
    description="社交媒体语料的心理语言学对比分析 - 开放词表、封闭词表与发帖行为",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("tests", "tests.*")),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Information Analysis",
        "Topic :: Text Processing :: Linguistic",
    ],
    python_requires=">=3.8",
    install_requires=install_requires,
    extras_require={"dev": dev_requires},
    entry_points={
        "console_scripts": [
            "psycholex=psycholex.main:main",
        ],
    },
    package_data={
        "psycholex": ["data/*.txt", "data/*.jsonl", "data/lexicons/*.tsv"],
    },
    include_package_data=True,
    zip_safe=False,
)

from setuptools import setup, find_packages

setup(
    name="neutrino-sta",
    version="1.0.0",
    description="Spacetime-algebra identity checks and the quantized neutrino mass spectrum",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.9",
    install_requires=[
        "mcp>=1.0.0,<2",
        "openpyxl>=3.1.0",
        "numpy>=1.24",
        "scipy>=1.10",
        "pydantic>=2.0",
        "click>=8.0",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "neutrino-sta=neutrino_sta.cli:main",
            "neutrino-sta-mcp=neutrino_sta.main:main",
        ],
    },
)

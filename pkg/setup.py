from setuptools import setup, find_packages

setup(
    name="planck-relativity-check",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    py_modules=["planck_cli"],
    install_requires=[
        "numpy",
        "python-dotenv",
    ],
    extras_require={
        "test": ["hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "planck-check=planck_cli:main",
        ],
    },
    python_requires=">=3.8",
)

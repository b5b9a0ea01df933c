from setuptools import setup, find_packages

setup(
    name="nsbell",
    version="0.1.0",
    packages=find_packages(include=["nsbell", "nsbell.*"]),
    py_modules=["log_config"],
)

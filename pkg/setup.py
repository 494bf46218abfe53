from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="pygoldie",
    version="0.1.0",
    description="Goldie ranks of primitive ideals in U(gl_N)",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["pygoldie"],
    test_suite="tests",
    install_requires=["numpy", "scipy", "sympy"],
    entry_points={"console_scripts": ["pygoldie=pygoldie.cli:main"]},
)

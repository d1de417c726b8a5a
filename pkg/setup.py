from setuptools import setup

__version__ = '0.1.0'

setup(
    name='casimirpy',
    version=__version__,
    description='Casimir stress in and force on a metal slab in a planar cavity.',
    long_description=open('Readme.md').read(),
    long_description_content_type='text/markdown',
    python_requires='>=3.6',
    install_requires=['numpy>=1.17', 'scipy>=1.6'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['casimir=casimirpy.cli:main']},
    zip_safe=False,
    packages=["casimirpy",
              "casimirpy.cli",
              "casimirpy.lifshitz",
              "casimirpy.oracle",
              "casimirpy.scenarios",
              "casimirpy.util"]
)

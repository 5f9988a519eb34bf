from setuptools import setup, find_packages  # Always prefer setuptools over distutils
from codecs import open  # To use a consistent encoding
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the relevant file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='mobiuscheck',

    # Versions should comply with PEP440.
    version='0.3.0',

    description="Decide whether a chord diagram is weakly realizable on the Moebius band, with checkable certificates and brute-force cross-checks.",
    long_description=long_description,
    long_description_content_type='text/markdown',

    # Choose your license
    license='AGPL',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],

    # What does your project relate to?
    keywords='chord diagram interlacement graph gf2 rank moebius band ribbon graph',

    packages=find_packages(exclude=['tests*']),

    setup_requires=['wheel'],
    # List run-time dependencies here.  These will be installed by pip when your
    # project is installed.
    install_requires=[
        "python-dotenv",
        "numpy",
        "networkx",
        "matplotlib",
    ],

    python_requires='>=3.8',

    package_data={
    },

    data_files=[],

    # To provide executable scripts, use entry points in preference to the
    # "scripts" keyword.
    entry_points={
        'console_scripts': [
            'mobiuscheck = mobiuscheck.main:main',
        ],
    },
)

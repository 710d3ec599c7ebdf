import os

from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'README.rst')) as f:
    README = f.read()
with open(os.path.join(here, 'CHANGES.rst')) as f:
    CHANGES = f.read()

requires = [
    'rainbow_logging_handler',
    'PyYAML',
    'zope.dottedname',
    'networkx',
    'graphviz',
    ]

setup(name='primeweave.core',
      version='0.1.dev0',
      description='Prime vertex labelings for unicyclic graph families, with a verifier, a backtracking solver and a conjecture scanner',
      long_description=README + '\n\n' + CHANGES,
      # https://packaging.python.org/en/latest/distributing.html#classifiers
      classifiers=[
        'Development Status :: 3 - Alpha',
        "Programming Language :: Python",
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
      keywords='graph labeling prime unicyclic number theory',
      packages=find_packages(),
      include_package_data=True,
      package_data={'primeweave.core.tests': ['*.yaml']},
      zip_safe=False,
      test_suite='primeweave.core',
      install_requires=requires,
      entry_points="""\
      [console_scripts]
      prime-weave = primeweave.core.cli.main:main
      """,
      )

#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


def read_requirements(path):
    """Requirement lines of a requirements file, comments skipped."""
    with open(path) as requirements_file:
        return [line.strip() for line in requirements_file if line.strip() and not line.startswith('#')]


requirements = read_requirements('requirements.txt')
test_requirements = read_requirements('dev-requirements.txt')

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')
version = open('.VERSION').read().strip()


setup(
    name='''cylrep''',
    version=version,
    description='''cylrep validates finite cylindric-type algebras given by their atom structures and builds their representations as relativized set algebras''',
    long_description=readme + '\n\n' + history,
    author='''The cylrep authors''',
    author_email='''cylrep@users.noreply.github.com''',
    packages=find_packages(where='.', exclude=('tests',)),
    package_dir={'''cylrep''':
                 '''cylrep'''},
    include_package_data=True,
    install_requires=requirements,
    license='MIT',
    zip_safe=False,
    keywords='''cylrep cylindric algebra representation atom structure network game''',
    entry_points={
        'console_scripts': [
            # installs a script called cylrep that points to the cylrep.cylrep:main method
            'cylrep = cylrep.cylrep:main'
        ]},
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.7',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    test_suite='tests',
    tests_require=test_requirements
)

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

TEST_REQUIRES = ['pytest', 'pytest-datadir',
                 'coverage', 'hypothesis']

setup(
    author="Jason Joyce",
    author_email='fuzzball81@gmail.com',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    description="Expected-NPV planner for copper to PON access network migrations.",
    setup_requires=['pytest-runner'],
    install_requires=['toolchest>=0.0.4', 'networkx'],
    python_requires='>=3.8',
    tests_require=TEST_REQUIRES,
    extras_require={'docs': ['sphinx', 'sphinx-autobuild', 'sphinx-rtd-theme'],
                    'test': TEST_REQUIRES},
    entry_points={'console_scripts': ['netmig=netmig.netmig:main']},
    license="MIT license",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    package_data={'netmig': ['config/defaults.yml',
                             'scenarios/data/manifest.yml',
                             'scenarios/data/*/*.json']},
    keywords='netmig expectimax pon migration npv',
    name='netmig',
    packages=find_packages(include=['netmig', 'netmig.*']),
    test_suite='tests',
    version='0.1.0',
    zip_safe=False,
)

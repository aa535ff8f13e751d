#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

# get the requirements from the requirements.txt
requirements = [line.strip()
                for line in open('requirements.txt').readlines()
                if line.strip() and not line.startswith('#')]
# get the test requirements from the dev-requirements.txt
test_requirements = [line.strip()
                     for line in
                     open('dev-requirements.txt').readlines()
                     if line.strip() and not line.startswith('#')]

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')
version = open('.VERSION').read().strip()


setup(
    name='''qclusterlib''',
    version=version,
    description='''Graded quantum cluster algebra seeds, exact mutation, rooted cluster morphisms and quantum Grassmannian seeds.''',
    long_description=readme + '\n\n' + history,
    author='''qclusterlib developers''',
    author_email='''qclusterlib@users.noreply.github.com''',
    url='''https://github.com/qclusterlib/qclusterlib''',
    packages=find_packages(where='.', exclude=('tests',)),
    package_dir={'''qclusterlib''':
                 '''qclusterlib'''},
    include_package_data=True,
    install_requires=requirements,
    entry_points={'console_scripts': ['qcluster = qclusterlib.cli:main']},
    license='MIT',
    zip_safe=False,
    keywords='''qclusterlib quantum cluster algebra mutation quiver grassmannian''',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    test_suite='tests',
    tests_require=test_requirements
)

#!/usr/bin/env python

from setuptools import setup
from tqftrep import __version__

setup(
    name='TQFTRep',
    version=__version__,
    # The following is need only if publishing this under PyPI or similar
    #description = 'Exact SU(2)/SO(3) TQFT braid group representations',
    license = 'License :: OSI Approved :: BSD License',
    packages = ['tqftrep',
                'tqftrep.scalar',
                'tqftrep.recoupling',
                'tqftrep.oracle',
                'tqftrep.rep',
                'tqftrep.analysis',
                'tqftrep.checks',
                'tqftrep.orm',
                'tqftrep.utils'],
    package_dir = {'tqftrep': 'tqftrep'},
    install_requires = ['numpy', 'sympy', 'sqlalchemy >= 1.3', 'astropy'],
    scripts = ['tqftrep/scripts/tqftrep']
)

#!/usr/bin/env python

""" setup.py: install orbichi v 0.1.0

Copyright (C) 2026  orbichi developers

This program is free software: you can redistribute it and/or modify it under
the terms of the GNU General Public License as published by the Free Software
Foundation, either version 3 of the License, or (at your option) any later
version.

Redistribution and use in source and binary forms, with or without modifications,
are permitted provided that the following conditions are met:
 o Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.
 o Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

pip install orbichi

"""

#__name__ = 'setup'
__license__ = 'GPLv3'
__version__ = '0.1.0'
__date__ = 'October 2026'
__status__ = 'Development'

from setuptools import setup, find_packages
import orbichi

setup(name='orbichi',
      version=orbichi.version,
      description="Exact orbifold Euler characteristics, twisted sectors and chart indices",
      long_description=orbichi.long_desc,
      author=orbichi.__author__,
      maintainer=orbichi.__maintainer__,
      license=orbichi.__license__,
      classifiers=['Development Status :: 4 - Beta',
                   'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
                   'Intended Audience :: Science/Research',
                   'Topic :: Scientific/Engineering :: Mathematics',
                   'Topic :: Software Development :: Libraries',
                   'Operating System :: OS Independent',
                   'Programming Language :: Python',
                   'Programming Language :: Python :: 3'],
    keywords='orbifold euler characteristic twisted sector chen-ruan simplicial',
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.8',
    install_requires=['numpy>=1.20','sympy>=1.9'],
    extras_require={'test':['pytest>=7']},
    entry_points={'console_scripts':['orbichi=orbichi.cli:main']}
)

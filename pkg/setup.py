#!/usr/bin/env python

# Metadata, package layout and the ``gorlocus`` console script live in setup.cfg.

from setuptools import setup


setup()

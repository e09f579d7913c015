#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Runs the cylrep command line from a checkout."""

from cylrep.cylrep import main

if __name__ == '__main__':
    main()

#! /usr/bin/env python

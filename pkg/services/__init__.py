"""
Services package for trig-fourier-lab
"""

# This file makes the services directory a Python package

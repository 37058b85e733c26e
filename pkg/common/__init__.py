"""
Common package for shared models and errors.
"""

"""
Service handlers: configuration, frame sweep, report encoding and invariant suites.
"""

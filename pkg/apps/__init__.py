"""
Command-line applications
"""

"""
forcing-lab command-line harness
"""

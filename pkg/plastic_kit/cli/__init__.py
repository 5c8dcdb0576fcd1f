"""
Command Groups
"""

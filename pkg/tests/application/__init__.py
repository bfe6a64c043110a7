"""
Application tests package
"""

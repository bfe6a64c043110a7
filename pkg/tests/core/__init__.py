"""
Core tests package
"""

"""
Domain tests package
"""

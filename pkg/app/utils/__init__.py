"""
Utils Package
"""
# Decorators are imported directly where needed to avoid circular imports

__all__ = []

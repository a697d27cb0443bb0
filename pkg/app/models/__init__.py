"""
Models Package
"""
# Models are imported from their modules; relation models depend on the linalg service
__all__ = []

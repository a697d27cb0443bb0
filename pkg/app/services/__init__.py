"""
Services Package
"""
# Import services from their modules to avoid circular imports
__all__ = []

"""
Hinge Urchin Application Package
"""
__version__ = '1.0.0'

from app.config.settings import settings

__all__ = ['settings']

"""
Handlers Package
"""
# Handlers are imported by main.py directly to keep service imports lazy
__all__ = []

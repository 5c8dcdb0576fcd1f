"""
Utility functions
"""
from plastic_kit.utils.decorators import handle_errors
from plastic_kit.utils.numbers import format_complex, format_exact

__all__ = ['handle_errors', 'format_exact', 'format_complex']

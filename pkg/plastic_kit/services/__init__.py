"""
Computation Services
"""
from plastic_kit.services.numeric_service import NumericService
from plastic_kit.services.sequence_service import SeqEngine

__all__ = ['NumericService', 'SeqEngine']

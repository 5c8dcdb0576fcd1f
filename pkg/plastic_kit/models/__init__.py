"""
Domain Models
"""
from plastic_kit.models.poly import Poly, RatFun
from plastic_kit.models.matrix import Mat3, det3
from plastic_kit.models.ring import RingElem, SetTableEntry, SET_TABLE
from plastic_kit.models.sequence import ZeroSet
from plastic_kit.models.series import CubicRoots, EgfCheckpoint, PowerSeries
from plastic_kit.models.identity import CheckResult, GenericAlgebraIdentity, IdentityDescriptor
from plastic_kit.models.grid import ParamGrid
from plastic_kit.models.report import ErrataFinding, IdentityTally, Report

__all__ = [
    'Poly',
    'RatFun',
    'Mat3',
    'det3',
    'RingElem',
    'SetTableEntry',
    'SET_TABLE',
    'ZeroSet',
    'CubicRoots',
    'EgfCheckpoint',
    'PowerSeries',
    'CheckResult',
    'GenericAlgebraIdentity',
    'IdentityDescriptor',
    'ParamGrid',
    'ErrataFinding',
    'IdentityTally',
    'Report',
]

"""
Scale checks run before heavy constructions.
"""
from .validator import STRETCH, ScaleValidator, enforce

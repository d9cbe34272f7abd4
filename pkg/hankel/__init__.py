"""
Determinantes de Hankel de sucesiones automáticas y exponentes de irracionalidad
"""
__version__ = "1.0.0"

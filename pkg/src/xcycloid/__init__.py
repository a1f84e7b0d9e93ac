"""Epitrochoid and hypotrochoid animations from composed rotations."""

from .core import (
    DEFAULTS,
    Affine2,
    CurveClass,
    Point2,
    TrochoidParams,
    classify,
    closed_form_epitrochoid,
    closed_form_hypotrochoid,
    compose,
    initial_layout,
    rotation_about,
    sample_angles,
    t1,
    t2,
    trace,
    trochoid_point,
)
from .usersetting import VarTable, apply_overrides, parse_usersetting

__version__ = "0.1.0"

"""
Models package containing the shared domain dataclasses.
"""
from .models import (Boost, ConvergenceReport, EnergyRatioReport, FieldState,
                     FourVector, FrameRow, FrequencyEnergySample, Grid1D,
                     MonochromaticPulse, OutputFormat, PhotonEnsemble, PlanckFit,
                     QuadraturePlan, QuadratureRule, RunReport, SuiteResult,
                     SweepConfig, WaveFourVector, WaveProfile)

__all__ = [
    'Boost', 'ConvergenceReport', 'EnergyRatioReport', 'FieldState', 'FourVector',
    'FrameRow', 'FrequencyEnergySample', 'Grid1D', 'MonochromaticPulse',
    'OutputFormat', 'PhotonEnsemble', 'PlanckFit', 'QuadraturePlan',
    'QuadratureRule', 'RunReport', 'SuiteResult', 'SweepConfig',
    'WaveFourVector', 'WaveProfile',
]

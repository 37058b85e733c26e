"""
Physics package: frame kinematics, field transformation, pulse energy,
photon bookkeeping and the wave-equation check.
"""

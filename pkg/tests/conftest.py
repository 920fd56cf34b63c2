import os
import sys

from hypothesis import HealthCheck, settings

# Ensure repository root is on sys.path so 'src' package imports work consistently
repo_root = os.path.abspath(os.path.dirname(os.path.dirname(__file__)))
if repo_root not in sys.path:
    sys.path.insert(0, repo_root)

# Quadrature and LP calls are slow compared to hypothesis' default deadline
settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

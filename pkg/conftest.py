import os

from hypothesis import HealthCheck, settings

# max_examples is set per test
settings.register_profile('default', deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('ci', parent=settings.get_profile('default'), derandomize=True)
settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))

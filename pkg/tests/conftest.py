from hypothesis import HealthCheck, settings

# Exact combinatorics on a possibly loaded machine: wall-clock based
# health checks and deadlines only produce flaky failures here.
settings.register_profile(
    "steintorus",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("steintorus")

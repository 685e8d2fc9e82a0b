from hypothesis import settings

# reproducible property runs: fixed example generation, no wall-clock deadline
settings.register_profile("repro", deadline=None, derandomize=True)
settings.load_profile("repro")

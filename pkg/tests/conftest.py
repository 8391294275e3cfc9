from hypothesis import settings

settings.register_profile(
    "polarlink", derandomize=True, max_examples=60, deadline=None
)
settings.load_profile("polarlink")
